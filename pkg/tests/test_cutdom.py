import pytest

from ectdom import families as fam
from ectdom.classical import CapExceededError, edge_connectivity, edge_domination_number, max_matching
from ectdom.cutdom import (
    ct_profile,
    enumerate_maximal_ec_independent,
    enumerate_maximal_ec_irredundant,
    enumerate_minimal_ecd,
    gamma_ct,
)
from ectdom.graph import EdgeSet, Graph
from ectdom.predicates import (
    InterpretationMode as Mode,
    PreconditionError,
    is_ec_independent,
    is_ec_irredundant,
    is_edge_cut_dominating,
    is_maximal_ec_independent,
    is_maximal_ec_irredundant,
    is_minimal_ecd,
)

from .conftest import all_subsets


def brute_profile(g, mode):
    """Reference profile built from the plain predicates only."""
    ecd, min_ecd, max_irr, max_ind = [], [], [], []
    for f in all_subsets(g):
        if is_edge_cut_dominating(g, f):
            ecd.append(f)
            if is_minimal_ecd(g, f):
                min_ecd.append(f)
        if is_ec_irredundant(g, f, mode) and is_maximal_ec_irredundant(g, f, mode):
            max_irr.append(f)
        if is_ec_independent(g, f, mode) and is_maximal_ec_independent(g, f, mode):
            max_ind.append(f)

    def lo(fs):
        return min(map(len, fs), default=None)

    def hi(fs):
        return max(map(len, fs), default=None)

    return {
        "gamma_ct": lo(ecd), "Gamma_ct": hi(min_ecd), "ir_ct": lo(max_irr),
        "IR_ct": hi(max_irr), "i_ct": lo(max_ind), "beta_ct": hi(max_ind),
    }, (min_ecd, max_irr, max_ind)


@pytest.mark.parametrize(
    "g, value",
    [(fam.complete(5), 4), (fam.cycle(7), 3), (fam.wheel(6), 4), (fam.complete_bipartite(3, 2), 2),
     (fam.path(7), 2), (fam.complete(8), 7)],
)
def test_gamma_ct_examples(g, value):
    r = gamma_ct(g)
    assert r.value == value == len(r.witness)
    assert is_edge_cut_dominating(g, r.witness)


def test_gamma_ct_figure2_unique_witness():
    g, _ = fam.figure2()
    r = gamma_ct(g)
    assert r.value == 2
    assert g.pairs(r.witness) == [(1, 3), (2, 4)]
    pairs = [f for f in all_subsets(g) if len(f) == 2 and is_edge_cut_dominating(g, f)]
    assert pairs == [r.witness]


def test_gamma_ct_errors():
    with pytest.raises(PreconditionError):
        gamma_ct(Graph(1, []))
    with pytest.raises(PreconditionError):
        gamma_ct(Graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(CapExceededError):
        gamma_ct(fam.complete(8), cap=20)


@pytest.mark.parametrize("mode", list(Mode))
def test_profile_c4(mode):
    p = ct_profile(fam.cycle(4), mode)
    assert p.values() == dict.fromkeys(p.values(), 2)


def test_profile_k2():
    for mode in Mode:
        assert set(ct_profile(fam.complete(2), mode).values().values()) == {1}


def test_profile_figure2():
    g, abc = fam.figure2()
    p = ct_profile(g, Mode.LITERAL)
    assert p.gamma_ct == 2 and p.Gamma_ct >= 3
    assert abc in list(enumerate_minimal_ecd(g))


def test_enumerate_examples():
    k2 = fam.complete(2)
    assert list(enumerate_minimal_ecd(k2)) == [EdgeSet.full(1)]
    c4 = fam.cycle(4)
    found = list(enumerate_minimal_ecd(c4))
    assert c4.edge_set([(0, 1), (2, 3)]) in found
    assert c4.edge_set([(0, 1), (1, 2)]) in found
    assert all(is_minimal_ecd(c4, f) for f in found)


def test_profile_cap():
    with pytest.raises(CapExceededError, match="--profile-cap"):
        ct_profile(fam.complete(7))
    assert ct_profile(fam.cycle(5), cap=5).gamma_ct == 2


def test_profile_matches_predicate_oracle(catalogue5):
    extra = [fam.figure1()[0], fam.figure2()[0], fam.wheel(4), fam.two_cliques(3, 3, 1)]
    for g in catalogue5 + extra:
        for mode in Mode:
            expected, (min_ecd, max_irr, max_ind) = brute_profile(g, mode)
            p = ct_profile(g, mode)
            assert p.values() == expected, (g.edges, mode)
            assert p.counts == {
                "minimal_ecd": len(min_ecd),
                "maximal_ec_irredundant": len(max_irr),
                "maximal_ec_independent": len(max_ind),
            }
            assert list(enumerate_maximal_ec_irredundant(g, mode)) == max_irr
            assert list(enumerate_maximal_ec_independent(g, mode)) == max_ind


def _lexmin(fs, size):
    return min((f for f in fs if len(f) == size), key=lambda f: f.indices())


def test_witness_tie_break_is_lexicographic():
    g = fam.two_cliques(3, 3, 1)
    for mode in Mode:
        _, (min_ecd, max_irr, max_ind) = brute_profile(g, mode)
        p = ct_profile(g, mode)
        assert p.witnesses["Gamma_ct"] == _lexmin(min_ecd, p.Gamma_ct)
        assert p.witnesses["ir_ct"] == _lexmin(max_irr, p.ir_ct)
        assert p.witnesses["IR_ct"] == _lexmin(max_irr, p.IR_ct)
        assert p.witnesses["i_ct"] == _lexmin(max_ind, p.i_ct)
        assert p.witnesses["beta_ct"] == _lexmin(max_ind, p.beta_ct)
        assert p.witnesses["gamma_ct"] == gamma_ct(g).witness


def test_invariants_over_catalogue(catalogue6):
    for g in catalogue6:
        gc = gamma_ct(g)
        assert edge_domination_number(g).value <= gc.value
        assert edge_connectivity(g).value <= gc.value
        if g.m > 1:
            assert gc.value <= g.m - max_matching(g).value
        if g.m > 15:
            continue
        lit, strict = ct_profile(g, Mode.LITERAL), ct_profile(g, Mode.STRICT)
        assert lit.gamma_ct == strict.gamma_ct == gc.value
        assert lit.Gamma_ct == strict.Gamma_ct
        for p in (lit, strict):
            assert p.gamma_ct <= p.Gamma_ct
            if p.ir_ct is not None:
                assert p.ir_ct <= p.IR_ct
            if p.i_ct is not None:
                assert p.i_ct <= p.beta_ct
            for name, f in p.witnesses.items():
                assert (f is None) == (p.values()[name] is None)
                if f is not None:
                    assert len(f) == p.values()[name]


def test_empty_family_is_undefined_not_zero():
    import numpy as np
    from ectdom.cutdom import _extreme

    assert _extreme(np.zeros(0, dtype=np.int64), 5, largest=False) == (None, None)
    assert _extreme(np.array([0b0110, 0b1001]), 4, largest=True)[1] == EdgeSet(0b1001, 4)


def test_families_nonempty_on_small_catalogue(catalogue5):
    for g in catalogue5:
        for mode in Mode:
            assert None not in ct_profile(g, mode).values().values()
