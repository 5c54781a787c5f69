"""numba-compiled twins of :mod:`ectdom.kernels._numpy` (same signatures, same results)."""

import numpy as np
from numba import njit


@njit(cache=True)
def _canon_min_row(x, table):
    perms, p = table.shape
    best = np.int64(-1)
    for s in range(perms):
        code = np.int64(0)
        # bail out once the running prefix already exceeds the best prefix
        worse = False
        for q in range(p):
            code = (code << 1) | x[table[s, q]]
            if best >= 0 and code > (best >> (p - 1 - q)):
                worse = True
                break
        if not worse and (best < 0 or code < best):
            best = code
    return best


@njit(cache=True)
def canon_min_batch(x, table):
    out = np.empty(x.shape[0], dtype=np.int64)
    if table.shape[1] == 0:
        out[:] = 0
        return out
    for b in range(x.shape[0]):
        out[b] = _canon_min_row(x[b], table)
    return out


@njit(cache=True)
def _find(parent, a):
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


@njit(cache=True)
def _is_cut(mask, n, eu, ev, parent):
    for v in range(n):
        parent[v] = v
    comps = n
    for e in range(eu.shape[0]):
        if (mask >> e) & 1:
            continue
        ra = _find(parent, eu[e])
        rb = _find(parent, ev[e])
        if ra != rb:
            parent[ra] = rb
            comps -= 1
            if comps == 1:
                return False
    return comps >= 2


@njit(cache=True)
def _is_dominating(mask, nbr, full):
    cov = np.int64(0)
    for e in range(nbr.shape[0]):
        if (mask >> e) & 1:
            cov |= nbr[e] | (np.int64(1) << e)
    return cov == full


@njit(cache=True)
def subset_tables(n, eu, ev, nbr):
    m = nbr.shape[0]
    size = np.int64(1) << m
    full = size - 1
    cov = np.zeros(size, dtype=np.int64)
    dom = np.zeros(size, dtype=np.bool_)
    cut = np.zeros(size, dtype=np.bool_)
    parent = np.empty(max(n, 1), dtype=np.int64)
    dom[0] = m == 0
    cut[0] = _is_cut(np.int64(0), n, eu, ev, parent)
    for f in range(1, size):
        low = f & -f
        e = 0
        while (np.int64(1) << e) != low:
            e += 1
        cov[f] = cov[f ^ low] | nbr[e] | low
        dom[f] = cov[f] == full
        cut[f] = _is_cut(np.int64(f), n, eu, ev, parent)
    return dom, cut


@njit(cache=True)
def ec_tables(nbr, cut, strict):
    m = nbr.shape[0]
    size = np.int64(1) << m
    irr = np.zeros(size, dtype=np.bool_)
    ind = np.zeros(size, dtype=np.bool_)
    for f in range(size):
        if strict and not cut[f]:
            continue
        indep = np.int64(0)
        priv = np.int64(0)
        for e in range(m):
            bit = np.int64(1) << e
            t = nbr[e] & f
            if f & bit:
                if t == 0:
                    indep |= bit
            elif t != 0 and (t & (t - 1)) == 0:
                priv |= t
        priv |= indep
        ok_irr = True
        ok_ind = True
        for e in range(m):
            bit = np.int64(1) << e
            if not (f & bit) or not cut[f ^ bit]:
                continue
            if not (priv & bit):
                ok_irr = False
            if not (indep & bit):
                ok_ind = False
        irr[f] = ok_irr
        ind[f] = ok_ind
    return irr, ind


@njit(cache=True)
def minimal_flags(table):
    size = table.shape[0]
    m = 0
    while (1 << m) < size:
        m += 1
    out = np.zeros(size, dtype=np.bool_)
    for f in range(size):
        if not table[f]:
            continue
        ok = True
        for e in range(m):
            bit = 1 << e
            if (f & bit) and table[f ^ bit]:
                ok = False
                break
        out[f] = ok
    return out


@njit(cache=True)
def maximal_flags(table):
    size = table.shape[0]
    m = 0
    while (1 << m) < size:
        m += 1
    out = np.zeros(size, dtype=np.bool_)
    for f in range(size):
        if not table[f]:
            continue
        ok = True
        for e in range(m):
            bit = 1 << e
            if not (f & bit) and table[f | bit]:
                ok = False
                break
        out[f] = ok
    return out


@njit(cache=True)
def first_subset(n, eu, ev, nbr, k, need_cut, forced_in, forced_out):
    m = nbr.shape[0]
    full = (np.int64(1) << m) - 1
    fixed = 0
    free = np.empty(m, dtype=np.int64)
    nfree = 0
    for e in range(m):
        if (forced_in >> e) & 1:
            fixed += 1
        elif not (forced_out >> e) & 1:
            free[nfree] = e
            nfree += 1
    r = k - fixed
    if r < 0 or r > nfree:
        return np.int64(-1)
    parent = np.empty(max(n, 1), dtype=np.int64)
    idx = np.arange(r)
    while True:
        mask = np.int64(forced_in)
        for i in range(r):
            mask |= np.int64(1) << free[idx[i]]
        if _is_dominating(mask, nbr, full):
            if not need_cut or _is_cut(mask, n, eu, ev, parent):
                return mask
        # advance to the next combination in lexicographic order
        i = r - 1
        while i >= 0 and idx[i] == nfree - r + i:
            i -= 1
        if i < 0:
            return np.int64(-1)
        idx[i] += 1
        for j in range(i + 1, r):
            idx[j] = idx[j - 1] + 1
