"""Simple undirected graphs with index-addressed edges and bit-vector edge subsets."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "CANONICAL_MAX_N",
    "EdgeSet",
    "Graph",
    "GraphError",
    "canonical_form",
    "component_count",
    "edge_neighbors",
    "is_connected",
    "new_graph",
    "pair_index",
]

CANONICAL_MAX_N = 8


class GraphError(ValueError):
    """Malformed graph, foreign edge set or out-of-range index."""


@dataclass(frozen=True)
class EdgeSet:
    """A subset of a graph's edges stored as an integer bit vector.

    Bit ``i`` is set iff edge ``i`` of the owning graph is a member.
    """

    bits: int
    owner_m: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.owner_m:
            raise GraphError(f"bits {self.bits:#x} exceed edge count {self.owner_m}")

    @classmethod
    def empty(cls, m: int) -> EdgeSet:
        return cls(0, m)

    @classmethod
    def full(cls, m: int) -> EdgeSet:
        return cls((1 << m) - 1, m)

    @classmethod
    def from_indices(cls, m: int, indices: Iterable[int]) -> EdgeSet:
        bits = 0
        for i in indices:
            if not 0 <= i < m:
                raise GraphError(f"edge index {i} out of range for m={m}")
            bits |= 1 << i
        return cls(bits, m)

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.owner_m) if self.bits >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices())

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, e: int) -> bool:
        return 0 <= e < self.owner_m and bool(self.bits >> e & 1)

    def __bool__(self) -> bool:
        return self.bits != 0

    def complement(self) -> EdgeSet:
        return EdgeSet(~self.bits & ((1 << self.owner_m) - 1), self.owner_m)

    def add(self, e: int) -> EdgeSet:
        return EdgeSet(self.bits | (1 << e), self.owner_m)

    def remove(self, e: int) -> EdgeSet:
        return EdgeSet(self.bits & ~(1 << e), self.owner_m)

    def __or__(self, other: EdgeSet) -> EdgeSet:
        self._same_owner(other)
        return EdgeSet(self.bits | other.bits, self.owner_m)

    def __and__(self, other: EdgeSet) -> EdgeSet:
        self._same_owner(other)
        return EdgeSet(self.bits & other.bits, self.owner_m)

    def __sub__(self, other: EdgeSet) -> EdgeSet:
        self._same_owner(other)
        return EdgeSet(self.bits & ~other.bits, self.owner_m)

    def _same_owner(self, other: EdgeSet) -> None:
        if other.owner_m != self.owner_m:
            raise GraphError("edge sets belong to graphs of different size")

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        """Cardinality first, then the sorted index tuple lexicographically."""
        return len(self), self.indices()

    def __repr__(self) -> str:
        return f"EdgeSet({list(self.indices())}, m={self.owner_m})"


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Edges are stored as sorted pairs ``(u, v)`` with ``u < v`` in lexicographic
    order; an edge's position in :attr:`edges` is its permanent index.
    """

    def __init__(self, n: int, pairs: Iterable[Sequence[int]]):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        seen = set()
        for pair in pairs:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) has endpoint out of range for n={n}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        inc: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        self.incidence: tuple[tuple[int, ...], ...] = tuple(tuple(x) for x in inc)
        vmask = [sum(1 << i for i in x) for x in inc]
        self.nbr_masks: tuple[int, ...] = tuple(
            (vmask[u] | vmask[v]) & ~(1 << i) for i, (u, v) in enumerate(self.edges)
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def edge_index(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        try:
            return self._index_of[key]
        except KeyError:
            raise GraphError(f"no edge {key}") from None

    @cached_property
    def _index_of(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def edge_set(self, pairs: Iterable[Sequence[int]]) -> EdgeSet:
        """EdgeSet from vertex pairs."""
        return EdgeSet.from_indices(self.m, (self.edge_index(u, v) for u, v in pairs))

    def pairs(self, f: EdgeSet) -> list[tuple[int, int]]:
        self.check_owner(f)
        return [self.edges[i] for i in f.indices()]

    def check_owner(self, f: EdgeSet) -> None:
        if f.owner_m != self.m:
            raise GraphError(f"edge set of size-{f.owner_m} graph used with m={self.m}")

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def is_tree(self) -> bool:
        return self.m == self.n - 1 and is_connected(self)

    # arrays handed to the kernels
    @cached_property
    def eu(self) -> np.ndarray:
        return np.array([u for u, _ in self.edges], dtype=np.int64)

    @cached_property
    def ev(self) -> np.ndarray:
        return np.array([v for _, v in self.edges], dtype=np.int64)

    @cached_property
    def nbr(self) -> np.ndarray:
        return np.array(self.nbr_masks, dtype=np.int64)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def new_graph(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    return Graph(n, pairs)


def component_count(g: Graph, removed: EdgeSet | None = None) -> int:
    """Components of ``<V, E - removed>``; isolated vertices count."""
    bits = 0
    if removed is not None:
        g.check_owner(removed)
        bits = removed.bits
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = g.n
    for i, (u, v) in enumerate(g.edges):
        if bits >> i & 1:
            continue
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            count -= 1
    return count


def is_connected(g: Graph) -> bool:
    return g.n >= 1 and component_count(g) == 1


def edge_neighbors(g: Graph, e: int) -> EdgeSet:
    if not 0 <= e < g.m:
        raise GraphError(f"edge index {e} out of range for m={g.m}")
    return EdgeSet(g.nbr_masks[e], g.m)


def pair_index(i: int, j: int) -> int:
    """Position of pair ``i < j`` in upper-triangle column order (0,1),(0,2),(1,2),(0,3),..."""
    return j * (j - 1) // 2 + i


@lru_cache(maxsize=None)
def permutation_table(n: int) -> np.ndarray:
    """``T[s, q]``: pair index that lands on position ``q`` under permutation ``s``."""
    p = n * (n - 1) // 2
    perms = list(permutations(range(n)))
    table = np.empty((len(perms), p), dtype=np.int32)
    for s, sigma in enumerate(perms):
        for j in range(1, n):
            for i in range(j):
                a, b = sigma[i], sigma[j]
                table[s, pair_index(i, j)] = pair_index(min(a, b), max(a, b))
    return table


def adjacency_bits(g: Graph) -> np.ndarray:
    x = np.zeros(g.n * (g.n - 1) // 2, dtype=np.uint8)
    for u, v in g.edges:
        x[pair_index(u, v)] = 1
    return x


def code_to_bytes(n: int, code: int) -> bytes:
    return bytes([n]) + int(code).to_bytes(4, "big")


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte string: vertex count plus the minimum
    upper-triangle adjacency code over all vertex permutations.
    """
    if g.n > CANONICAL_MAX_N:
        raise GraphError(f"canonical_form supports n <= {CANONICAL_MAX_N}, got {g.n}")
    if g.n <= 1:
        return code_to_bytes(g.n, 0)
    from . import kernels

    table = permutation_table(g.n)
    code = kernels.canon_min_batch(adjacency_bits(g)[None, :], table)[0]
    return code_to_bytes(g.n, code)
