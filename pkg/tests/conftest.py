from itertools import combinations

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from ectdom import families as fam
from ectdom.graph import EdgeSet, Graph, component_count

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@st.composite
def connected_graphs(draw, min_n=2, max_n=7):
    """Random spanning tree plus random extra edges, then a random relabeling."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    rest = [p for p in combinations(range(n), 2) if p not in edges]
    if rest:
        extra = draw(st.lists(st.sampled_from(rest), unique=True, max_size=len(rest)))
        edges.update(extra)
    perm = draw(st.permutations(range(n)))
    return Graph(n, edges).relabel(perm)


def all_subsets(g: Graph):
    for bits in range(1 << g.m):
        yield EdgeSet(bits, g.m)


def brute_lambda(g: Graph) -> int:
    for k in range(g.m + 1):
        for combo in combinations(range(g.m), k):
            if component_count(g, EdgeSet.from_indices(g.m, combo)) >= 2:
                return k
    raise AssertionError("unreachable for n >= 2")


def brute_matching(g: Graph) -> int:
    best = 0
    for f in all_subsets(g):
        verts = [v for e in f for v in g.edges[e]]
        if len(verts) == len(set(verts)):
            best = max(best, len(f))
    return best


@pytest.fixture(scope="session")
def catalogue6():
    return [g for n in range(2, 7) for g in fam.all_connected_graphs(n)]


@pytest.fixture(scope="session")
def catalogue5():
    return [g for n in range(2, 6) for g in fam.all_connected_graphs(n)]
