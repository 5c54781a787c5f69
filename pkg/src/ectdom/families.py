"""Generators for the graph families under study and exhaustive small-graph catalogues.

Wheel convention: ``wheel(n)`` has order ``n + 1`` (a hub joined to every
vertex of the rim cycle C_n), so ``wheel(3)`` is K_4.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

import numpy as np

from . import kernels
from .graph import (
    CANONICAL_MAX_N,
    EdgeSet,
    Graph,
    GraphError,
    adjacency_bits,
    code_to_bytes,
    is_connected,
    permutation_table,
)

__all__ = [
    "FAMILIES",
    "FamilySpec",
    "all_connected_graphs",
    "all_graphs",
    "all_trees",
    "build",
    "complete",
    "complete_bipartite",
    "cycle",
    "figure1",
    "figure2",
    "path",
    "prufer_decode",
    "tree_code",
    "two_cliques",
    "wheel",
]

FAMILIES = ("complete", "cycle", "path", "wheel", "complete_bipartite", "two_cliques", "figure1", "figure2")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()

    def label(self) -> str:
        return f"{self.family}({','.join(map(str, self.params))})"

    def build(self) -> Graph:
        return build(self.family, *self.params)


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def wheel(n: int) -> Graph:
    _require(n >= 3, f"wheel needs a rim of n >= 3 vertices, got {n}")
    rim = [(i, (i + 1) % n) for i in range(n)]
    return Graph(n + 1, rim + [(i, n) for i in range(n)])


def complete_bipartite(m: int, n: int) -> Graph:
    _require(n >= 1, f"complete_bipartite needs n >= 1, got {n}")
    _require(m >= n, f"complete_bipartite sides misordered: need m >= n, got ({m},{n})")
    return Graph(m + n, ((i, m + j) for i in range(m) for j in range(n)))


def two_cliques(m: int, n: int, path_len: int) -> Graph:
    """K_m on ``0..m-1`` and K_n on ``m..m+n-1`` joined between vertices 0 and m."""
    _require(m > 2 and n > 2, f"two_cliques needs m, n > 2, got ({m},{n})")
    _require(path_len in (1, 2), f"path_len must be 1 or 2, got {path_len}")
    edges = list(combinations(range(m), 2)) + list(combinations(range(m, m + n), 2))
    if path_len == 1:
        return Graph(m + n, edges + [(0, m)])
    mid = m + n
    return Graph(m + n + 1, edges + [(0, mid), (m, mid)])


def figure1() -> tuple[Graph, EdgeSet]:
    """Maximal edge cut irredundant but not edge cut dominating: returns (G, {a, b})."""
    g = Graph(6, [(0, 1), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5)])
    return g, g.edge_set([(1, 2), (2, 3)])


def figure2() -> tuple[Graph, EdgeSet]:
    """Minimal edge cut dominating but not edge cut independent: returns (G, {a, b, c})."""
    g = Graph(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 4)])
    return g, g.edge_set([(1, 2), (2, 4), (3, 4)])


_BUILDERS = {
    "complete": complete,
    "cycle": cycle,
    "path": path,
    "wheel": wheel,
    "complete_bipartite": complete_bipartite,
    "two_cliques": two_cliques,
    "figure1": lambda: figure1()[0],
    "figure2": lambda: figure2()[0],
}


def build(family: str, *params: int) -> Graph:
    try:
        builder = _BUILDERS[family]
    except KeyError:
        raise GraphError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}") from None
    try:
        return builder(*params)
    except TypeError:
        raise GraphError(f"wrong number of parameters for {family}: {params}") from None


# -- trees ------------------------------------------------------------------

def prufer_decode(seq: tuple[int, ...], n: int) -> Graph:
    """Labeled tree on ``n`` vertices from a Prüfer sequence of length ``n - 2``."""
    if n == 1:
        return Graph(1, [])
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return Graph(n, edges)


def _rooted_code(adj: list[list[int]], root: int, parent: int) -> str:
    return "(" + "".join(sorted(_rooted_code(adj, c, root) for c in adj[root] if c != parent)) + ")"


def tree_code(t: Graph) -> str:
    """Canonical string of a tree: the smaller rooted code over its centers."""
    if t.n <= 2:
        return "()" * t.n
    adj: list[list[int]] = [[] for _ in range(t.n)]
    for u, v in t.edges:
        adj[u].append(v)
        adj[v].append(u)
    degree = [len(a) for a in adj]
    layer = [v for v in range(t.n) if degree[v] == 1]
    left = t.n
    while left > 2:
        left -= len(layer)
        nxt = []
        for leaf in layer:
            for w in adj[leaf]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt
    return min(_rooted_code(adj, c, -1) for c in layer)


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, []),)
    seen: dict[str, Graph] = {}
    for t in _trees(n - 1):
        for v in range(n - 1):
            grown = Graph(n, list(t.edges) + [(v, n - 1)])
            seen.setdefault(tree_code(grown), grown)
    return tuple(seen[k] for k in sorted(seen))


def all_trees(n: int) -> Iterator[Graph]:
    """All non-isomorphic trees on ``n`` vertices (1 <= n <= 9), deterministic order.

    Every tree on n vertices is a tree on n - 1 vertices plus a leaf, so the
    catalogue is grown level by level and deduplicated by :func:`tree_code`.
    """
    if not 1 <= n <= 9:
        raise GraphError(f"all_trees supports 1 <= n <= 9, got {n}")
    return iter(_trees(n))


# -- all graphs -------------------------------------------------------------

@lru_cache(maxsize=None)
def _graphs(n: int) -> tuple[tuple[bytes, Graph], ...]:
    if n == 1:
        return ((code_to_bytes(1, 0), Graph(1, [])),)
    candidates = []
    for _, g in _graphs(n - 1):
        for nb in range(1 << (n - 1)):
            extra = [(v, n - 1) for v in range(n - 1) if nb >> v & 1]
            candidates.append(Graph(n, list(g.edges) + extra))
    x = np.stack([adjacency_bits(g) for g in candidates])
    codes = kernels.canon_min_batch(x, permutation_table(n))
    seen: dict[int, Graph] = {}
    for code, g in zip(codes.tolist(), candidates):
        seen.setdefault(code, g)
    return tuple((code_to_bytes(n, c), seen[c]) for c in sorted(seen))


def all_graphs(n: int) -> Iterator[Graph]:
    """All non-isomorphic graphs on ``n`` vertices, ordered by canonical code."""
    if not 1 <= n <= CANONICAL_MAX_N - 1:
        raise GraphError(f"all_graphs supports 1 <= n <= {CANONICAL_MAX_N - 1}, got {n}")
    return (g for _, g in _graphs(n))


def all_connected_graphs(n: int, allow_n7: bool = False) -> Iterator[Graph]:
    """All non-isomorphic connected graphs on ``n`` vertices, ordered by canonical code.

    ``n = 7`` (853 graphs) needs ``allow_n7=True``.
    """
    top = 7 if allow_n7 else 6
    if not 2 <= n <= top:
        hint = " (n=7 needs allow_n7=True)" if n == 7 else ""
        raise GraphError(f"all_connected_graphs supports 2 <= n <= {top}, got {n}{hint}")
    return (g for g in all_graphs(n) if is_connected(g))
