"""Vectorized numpy implementations of the hot kernels.

Edge subsets are int64 bit masks; per-subset tables are indexed by the mask
itself, so ``table[F]`` answers the question for edge set ``F``.
"""

from itertools import combinations, islice

import numpy as np

CHUNK = 1 << 16


def canon_min_batch(x, table):
    """Minimum permuted upper-triangle code for each row of ``x``."""
    p = table.shape[1]
    if p == 0:
        return np.zeros(x.shape[0], dtype=np.int64)
    weights = np.left_shift(np.int64(1), np.arange(p - 1, -1, -1, dtype=np.int64))
    out = np.empty(x.shape[0], dtype=np.int64)
    step = max(1, (1 << 20) // table.size)
    for lo in range(0, x.shape[0], step):
        block = x[lo:lo + step][:, table].astype(np.int64)
        out[lo:lo + step] = (block @ weights).min(axis=1)
    return out


def _dominated(masks, nbr, full):
    cov = np.zeros_like(masks)
    for e in range(nbr.shape[0]):
        closed = np.int64(nbr[e] | (1 << e))
        cov |= np.where((masks >> e) & 1, closed, np.int64(0))
    return cov == full


def _disconnected(masks, n, eu, ev):
    """True where removing the masked edges leaves ``<V, E - F>`` disconnected."""
    m = eu.shape[0]
    full_v = np.int64((1 << n) - 1)
    reach = np.ones_like(masks)
    alive = [((masks >> e) & 1) == 0 for e in range(m)]
    ends = [np.int64((1 << int(eu[e])) | (1 << int(ev[e]))) for e in range(m)]
    while True:
        before = reach.copy()
        for e in range(m):
            touch = alive[e] & ((reach & ends[e]) != 0)
            reach |= np.where(touch, ends[e], np.int64(0))
        if np.array_equal(before, reach):
            break
    return reach != full_v


def subset_tables(n, eu, ev, nbr):
    """``(dominating, cut)`` boolean tables over all ``2**m`` edge subsets."""
    m = nbr.shape[0]
    cov = np.zeros(1, dtype=np.int64)
    for e in range(m):
        cov = np.concatenate([cov, cov | np.int64(nbr[e] | (1 << e))])
    dom = cov == np.int64((1 << m) - 1)
    masks = np.arange(1 << m, dtype=np.int64)
    cut = np.zeros(1 << m, dtype=np.bool_)
    for lo in range(0, 1 << m, CHUNK * 4):
        cut[lo:lo + CHUNK * 4] = _disconnected(masks[lo:lo + CHUNK * 4], n, eu, ev)
    return dom, cut


def ec_tables(nbr, cut, strict):
    """``(ec_irredundant, ec_independent)`` tables given the cut table."""
    m = nbr.shape[0]
    masks = np.arange(1 << m, dtype=np.int64)
    zero = np.int64(0)
    indep = np.zeros_like(masks)
    priv = np.zeros_like(masks)
    for e in range(m):
        bit = np.int64(1 << e)
        inside = (masks & bit) != 0
        t = masks & np.int64(nbr[e])
        indep |= np.where(inside & (t == 0), bit, zero)
        single = (t != 0) & ((t & (t - 1)) == 0)
        priv |= np.where(~inside & single, t, zero)
    priv |= indep
    irr = np.ones(1 << m, dtype=np.bool_)
    ind = np.ones(1 << m, dtype=np.bool_)
    for e in range(m):
        bit = np.int64(1 << e)
        inside = (masks & bit) != 0
        still_cut = cut[masks ^ bit]
        irr &= ~inside | ~still_cut | ((priv & bit) != 0)
        ind &= ~inside | ~still_cut | ((indep & bit) != 0)
    if strict:
        irr &= cut
        ind &= cut
    return irr, ind


def minimal_flags(table):
    """Members of ``table`` none of whose single-edge deletions is a member."""
    m = table.shape[0].bit_length() - 1
    masks = np.arange(1 << m, dtype=np.int64)
    out = table.copy()
    for e in range(m):
        bit = np.int64(1 << e)
        out &= ((masks & bit) == 0) | ~table[masks ^ bit]
    return out


def maximal_flags(table):
    """Members of ``table`` none of whose single-edge additions is a member."""
    m = table.shape[0].bit_length() - 1
    masks = np.arange(1 << m, dtype=np.int64)
    out = table.copy()
    for e in range(m):
        bit = np.int64(1 << e)
        out &= ((masks & bit) != 0) | ~table[masks | bit]
    return out


def first_subset(n, eu, ev, nbr, k, need_cut, forced_in, forced_out):
    """First ``k``-subset in lexicographic index order that contains
    ``forced_in``, avoids ``forced_out``, dominates every edge and, when
    ``need_cut``, disconnects the graph.  Returns the mask or -1.
    """
    m = nbr.shape[0]
    fixed = bin(forced_in).count("1")
    free = [e for e in range(m) if not ((forced_in | forced_out) >> e) & 1]
    r = k - fixed
    if r < 0 or r > len(free):
        return -1
    full = np.int64((1 << m) - 1)
    weights = np.array([1 << e for e in free], dtype=np.int64)
    combos = combinations(range(len(free)), r)
    while True:
        block = list(islice(combos, CHUNK))
        if not block:
            return -1
        if r == 0:
            masks = np.full(len(block), forced_in, dtype=np.int64)
        else:
            idx = np.array(block, dtype=np.int64)
            masks = weights[idx].sum(axis=1) | np.int64(forced_in)
        ok = _dominated(masks, nbr, full)
        if need_cut and ok.any():
            ok &= _disconnected(masks, n, eu, ev)
        hits = np.flatnonzero(ok)
        if hits.size:
            return int(masks[hits[0]])
