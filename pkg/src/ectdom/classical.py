"""Exact edge connectivity, matching number, edge covering number and edge domination number."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from math import comb

from . import kernels
from .graph import EdgeSet, Graph, is_connected
from .predicates import PreconditionError

__all__ = [
    "GAMMA_CT_MAX_M",
    "CapExceededError",
    "ParamResult",
    "ascending_search",
    "edge_connectivity",
    "edge_cover_number",
    "edge_domination_number",
    "max_matching",
]

GAMMA_CT_MAX_M = 28


class CapExceededError(ValueError):
    """Graph too large for the exhaustive method under the configured cap."""

    def __init__(self, what: str, m: int, cap: int, flag: str):
        self.flag = flag
        super().__init__(f"{what}: m={m} exceeds cap {cap} (raise with {flag})")


@dataclass(frozen=True)
class ParamResult:
    name: str
    value: int
    witness: EdgeSet
    subsets_examined: int = field(default=0, compare=False)


def edge_connectivity(g: Graph) -> ParamResult:
    """Minimum edge cut via unit-capacity max flow from vertex 0 to every other vertex.

    The witness is the cut read off the residual graph of the first sink
    attaining the minimum.
    """
    if g.n < 2:
        raise PreconditionError("edge connectivity needs at least two vertices")
    if not is_connected(g):
        raise PreconditionError("edge connectivity is defined for connected graphs")
    adj = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    best = None
    searches = 0
    for sink in range(1, g.n):
        flow: dict[tuple[int, int], int] = {}
        value = 0
        while True:
            searches += 1
            prev = {0: -1}
            queue = deque([0])
            while queue and sink not in prev:
                x = queue.popleft()
                for y in adj[x]:
                    if y not in prev and flow.get((x, y), 0) < 1:
                        prev[y] = x
                        queue.append(y)
            if sink not in prev:
                break
            y = sink
            while prev[y] != -1:
                x = prev[y]
                flow[(x, y)] = flow.get((x, y), 0) + 1
                flow[(y, x)] = flow.get((y, x), 0) - 1
                y = x
            value += 1
        if best is None or value < best[0]:
            side = set(prev)
            cut = [i for i, (u, v) in enumerate(g.edges) if (u in side) != (v in side)]
            best = (value, EdgeSet.from_indices(g.m, cut))
    return ParamResult("lambda", best[0], best[1], searches)


def max_matching(g: Graph) -> ParamResult:
    """Matching number by include/exclude branch and bound over edges in index order.

    Include-first depth-first order means the first maximum found is the
    lexicographically smallest maximum matching.
    """
    m = g.m
    used = [False] * g.n
    best_bits = 0
    best_size = 0
    nodes = 0

    def free_vertices() -> int:
        return used.count(False)

    def branch(i: int, bits: int, size: int) -> None:
        nonlocal best_bits, best_size, nodes
        nodes += 1
        if size > best_size:
            best_bits, best_size = bits, size
        if i == m:
            return
        if size + min(free_vertices() // 2, m - i) <= best_size:
            return
        u, v = g.edges[i]
        if not used[u] and not used[v]:
            used[u] = used[v] = True
            branch(i + 1, bits | (1 << i), size + 1)
            used[u] = used[v] = False
        branch(i + 1, bits, size)

    branch(0, 0, 0)
    return ParamResult("beta1", best_size, EdgeSet(best_bits, m), nodes)


def edge_cover_number(g: Graph) -> ParamResult:
    """alpha_1 = n - beta_1; a maximum matching plus one edge per unmatched vertex."""
    if any(g.degree(v) == 0 for v in range(g.n)):
        raise PreconditionError("graph has an isolated vertex, so no edge cover exists")
    matching = max_matching(g)
    bits = matching.witness.bits
    covered = set()
    for u, v in g.pairs(matching.witness):
        covered.update((u, v))
    for v in range(g.n):
        if v not in covered:
            bits |= 1 << g.incidence[v][0]
    return ParamResult("alpha1", g.n - matching.value, EdgeSet(bits, g.m), matching.subsets_examined)


def _lex_rank(chosen: list[int], pool: int) -> int:
    """0-based rank of a sorted combination among all ``len(chosen)``-subsets of ``range(pool)``."""
    r = len(chosen)
    rank = 0
    prev = -1
    for i, c in enumerate(chosen):
        for skipped in range(prev + 1, c):
            rank += comb(pool - skipped - 1, r - i - 1)
        prev = c
    return rank


def ascending_search(
    g: Graph,
    name: str,
    start_k: int,
    need_cut: bool,
    forced_in: EdgeSet | None = None,
    forced_out: EdgeSet | None = None,
) -> ParamResult | None:
    """Smallest dominating (and, if ``need_cut``, disconnecting) edge set by
    increasing cardinality; within a cardinality the lexicographically first
    index tuple wins.  Returns None when no admissible set exists.
    """
    fin = forced_in.bits if forced_in is not None else 0
    fout = forced_out.bits if forced_out is not None else 0
    if fin & fout:
        raise PreconditionError("forced_in and forced_out overlap")
    fixed = fin.bit_count()
    free = [e for e in range(g.m) if not (fin | fout) >> e & 1]
    examined = 0
    for k in range(max(start_k, fixed), fixed + len(free) + 1):
        mask = int(kernels.first_subset(g.n, g.eu, g.ev, g.nbr, k, need_cut, fin, fout))
        if mask >= 0:
            chosen = [free.index(e) for e in range(g.m) if (mask & ~fin) >> e & 1]
            examined += _lex_rank(chosen, len(free)) + 1
            return ParamResult(name, k, EdgeSet(mask, g.m), examined)
        examined += comb(len(free), k - fixed)
    return None


def edge_domination_number(g: Graph, cap: int = GAMMA_CT_MAX_M) -> ParamResult:
    if g.m == 0:
        raise PreconditionError("edge domination number needs at least one edge")
    if g.m > cap:
        raise CapExceededError("edge_domination_number", g.m, cap, "--gamma-cap")
    result = ascending_search(g, "gamma_prime", 1, need_cut=False)
    assert result is not None  # the full edge set always dominates
    return result
