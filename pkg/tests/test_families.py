from itertools import combinations, product

import networkx as nx
import pytest

from ectdom import families as fam
from ectdom.graph import EdgeSet, GraphError, canonical_form, is_connected
from ectdom.predicates import is_edge_cut


def test_basic_families():
    assert fam.complete(4).m == 6
    assert canonical_form(fam.cycle(3)) == canonical_form(fam.complete(3))
    p1 = fam.path(1)
    assert (p1.n, p1.m) == (1, 0)


def test_wheel():
    assert canonical_form(fam.wheel(3)) == canonical_form(fam.complete(4))
    w5 = fam.wheel(5)
    assert (w5.n, w5.m) == (6, 10)
    w6 = fam.wheel(6)
    assert w6.degree(6) == 6
    assert all(w6.degree(v) == 3 for v in range(6))


def test_complete_bipartite():
    assert fam.complete_bipartite(3, 3).m == 9
    star = fam.complete_bipartite(4, 1)
    assert star.degree(4) == 4 and star.m == 4
    with pytest.raises(GraphError, match="misordered"):
        fam.complete_bipartite(2, 3)


def test_two_cliques():
    g = fam.two_cliques(3, 3, 1)
    assert g.m == 7 and (0, 3) in g.edges
    h = fam.two_cliques(4, 4, 2)
    assert (h.n, h.m) == (9, 14)
    with pytest.raises(GraphError):
        fam.two_cliques(2, 3, 1)
    with pytest.raises(GraphError):
        fam.two_cliques(3, 3, 3)


@pytest.mark.parametrize("m, n, k, bridges", [(a, b, k, k) for a in (3, 4, 5) for b in (3, 4, 5) for k in (1, 2)])
def test_two_cliques_bridge_count(m, n, k, bridges):
    g = fam.two_cliques(m, n, k)
    found = sum(is_edge_cut(g, EdgeSet.from_indices(g.m, [e])) for e in range(g.m))
    assert found == bridges


def test_figures():
    g1, ab = fam.figure1()
    assert g1.m == 6 and is_connected(g1) and len(ab) == 2
    g2, abc = fam.figure2()
    assert g2.m == 6 and is_connected(g2) and len(abc) == 3


@pytest.mark.parametrize(
    "make",
    [lambda: fam.complete(0), lambda: fam.cycle(2), lambda: fam.path(0), lambda: fam.wheel(2),
     lambda: fam.complete_bipartite(1, 0), lambda: fam.build("petersen"), lambda: fam.build("cycle")],
)
def test_family_errors(make):
    with pytest.raises(GraphError):
        make()


def test_all_families_connected():
    specs = [("complete", (n,)) for n in range(1, 9)] + [("cycle", (n,)) for n in range(3, 13)]
    specs += [("path", (n,)) for n in range(1, 13)] + [("wheel", (n,)) for n in range(3, 10)]
    specs += [("complete_bipartite", (a, b)) for a in range(1, 5) for b in range(1, a + 1)]
    specs += [("two_cliques", (a, b, k)) for a, b, k in product((3, 4, 5), (3, 4, 5), (1, 2))]
    for name, params in specs:
        assert is_connected(fam.build(name, *params)), (name, params)


def test_tree_counts():
    assert [len(list(fam.all_trees(n))) for n in range(1, 10)] == [1, 1, 1, 2, 3, 6, 11, 23, 47]
    assert all(t.is_tree() for t in fam.all_trees(8))
    with pytest.raises(GraphError):
        fam.all_trees(10)


def test_trees_match_prufer_oracle():
    # every labeled tree on 7 vertices collapses onto the 11 generated classes
    n = 7
    codes = {fam.tree_code(fam.prufer_decode(seq, n)) for seq in product(range(n), repeat=n - 2)}
    generated = list(fam.all_trees(n))
    assert codes == {fam.tree_code(t) for t in generated}
    assert len({canonical_form(t) for t in generated}) == 11


def test_trees_match_networkx():
    for n in range(2, 10):
        ours = list(fam.all_trees(n))
        theirs = list(nx.nonisomorphic_trees(n))
        assert len(ours) == len(theirs)


def test_connected_graph_counts():
    assert [len(list(fam.all_connected_graphs(n))) for n in range(2, 7)] == [1, 2, 6, 21, 112]
    with pytest.raises(GraphError, match="allow_n7"):
        list(fam.all_connected_graphs(7))
    with pytest.raises(GraphError):
        list(fam.all_connected_graphs(1))


def test_connected_graphs_match_brute_labeled_enumeration():
    for n in range(2, 6):
        pairs = list(combinations(range(n), 2))
        forms = set()
        for bits in range(1 << len(pairs)):
            g = fam.Graph(n, [p for i, p in enumerate(pairs) if bits >> i & 1])
            if is_connected(g):
                forms.add(canonical_form(g))
        assert forms == {canonical_form(g) for g in fam.all_connected_graphs(n)}


@pytest.mark.slow
def test_connected_graphs_n7_matches_atlas():
    atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == 7 and nx.is_connected(h)]
    assert len(list(fam.all_connected_graphs(7, allow_n7=True))) == len(atlas) == 853


def test_catalogue_deterministic():
    first = [g.edges for g in fam.all_connected_graphs(5)]
    fam._graphs.cache_clear()
    assert [g.edges for g in fam.all_connected_graphs(5)] == first
