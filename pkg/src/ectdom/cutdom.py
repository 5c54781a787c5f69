"""The edge cut domination number and the five extremal edge cut parameters.

``gamma_ct`` stops at the first cardinality that works.  The remaining
parameters are a minimum over *maximal* sets or a maximum over *minimal* sets,
so :func:`ct_profile` classifies every one of the ``2**m`` edge subsets.
A parameter whose defining family is empty is reported as ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from . import kernels
from .classical import GAMMA_CT_MAX_M, CapExceededError, ParamResult, ascending_search, edge_connectivity
from .graph import EdgeSet, Graph, is_connected
from .predicates import InterpretationMode, PreconditionError

__all__ = [
    "PROFILE_MAX_M",
    "PROFILE_PARAMS",
    "CtProfile",
    "SubsetScan",
    "ct_profile",
    "enumerate_maximal_ec_independent",
    "enumerate_maximal_ec_irredundant",
    "enumerate_minimal_ecd",
    "gamma_ct",
    "scan",
]

PROFILE_MAX_M = 20
PROFILE_PARAMS = ("ir_ct", "gamma_ct", "i_ct", "beta_ct", "Gamma_ct", "IR_ct")


def _check_graph(g: Graph) -> None:
    if g.n < 2:
        raise PreconditionError("a single vertex has no edge cut")
    if not is_connected(g):
        raise PreconditionError("edge cut parameters are defined for connected graphs")


def gamma_ct(g: Graph, cap: int = GAMMA_CT_MAX_M) -> ParamResult:
    """Minimum edge cut dominating set, searched upward from k = lambda(g)."""
    _check_graph(g)
    if g.m > cap:
        raise CapExceededError("gamma_ct", g.m, cap, "--gamma-cap")
    lam = edge_connectivity(g).value
    result = ascending_search(g, "gamma_ct", lam, need_cut=True)
    assert result is not None  # E itself dominates and disconnects
    return result


@dataclass(frozen=True)
class SubsetScan:
    """Per-subset classification tables, indexed by edge mask."""

    m: int
    mode: InterpretationMode
    dominating: np.ndarray
    cut: np.ndarray
    minimal_ecd: np.ndarray
    maximal_ec_irredundant: np.ndarray
    maximal_ec_independent: np.ndarray


@lru_cache(maxsize=16)
def _base_tables(g: Graph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    dom, cut = kernels.subset_tables(g.n, g.eu, g.ev, g.nbr)
    return dom, cut, kernels.minimal_flags(dom & cut)


@lru_cache(maxsize=32)
def scan(g: Graph, mode: InterpretationMode = InterpretationMode.LITERAL, cap: int = PROFILE_MAX_M) -> SubsetScan:
    mode = InterpretationMode(mode)
    _check_graph(g)
    if g.m > cap:
        raise CapExceededError("extremal scan", g.m, cap, "--profile-cap")
    dom, cut, min_ecd = _base_tables(g)
    irr, ind = kernels.ec_tables(g.nbr, cut, mode is InterpretationMode.STRICT)
    return SubsetScan(
        m=g.m,
        mode=mode,
        dominating=dom,
        cut=cut,
        minimal_ecd=min_ecd,
        maximal_ec_irredundant=kernels.maximal_flags(irr),
        maximal_ec_independent=kernels.maximal_flags(ind),
    )


def _masks(flags: np.ndarray) -> np.ndarray:
    return np.flatnonzero(flags).astype(np.int64)


def _extreme(masks: np.ndarray, m: int, largest: bool) -> tuple[int | None, EdgeSet | None]:
    """Extreme cardinality among ``masks`` and its lexicographically first witness."""
    if masks.size == 0:
        return None, None
    sizes = np.bitwise_count(masks)
    value = int(sizes.max() if largest else sizes.min())
    tied = masks[sizes == value]
    # smaller index tuple <=> lowest differing bit is set <=> larger bit-reversed mask
    rev = np.zeros_like(tied)
    for e in range(m):
        rev |= ((tied >> e) & 1) << (m - 1 - e)
    return value, EdgeSet(int(tied[np.argmax(rev)]), m)


@dataclass(frozen=True)
class CtProfile:
    mode: InterpretationMode
    gamma_ct: int | None
    Gamma_ct: int | None
    ir_ct: int | None
    IR_ct: int | None
    i_ct: int | None
    beta_ct: int | None
    witnesses: dict[str, EdgeSet | None]
    counts: dict[str, int]

    def values(self) -> dict[str, int | None]:
        return {name: getattr(self, name) for name in PROFILE_PARAMS}


def ct_profile(g: Graph, mode: InterpretationMode = InterpretationMode.LITERAL, cap: int = PROFILE_MAX_M) -> CtProfile:
    s = scan(g, InterpretationMode(mode), cap)
    ecd = _masks(s.dominating & s.cut)
    min_ecd = _masks(s.minimal_ecd)
    max_irr = _masks(s.maximal_ec_irredundant)
    max_ind = _masks(s.maximal_ec_independent)
    found = {
        "gamma_ct": _extreme(ecd, g.m, largest=False),
        "Gamma_ct": _extreme(min_ecd, g.m, largest=True),
        "ir_ct": _extreme(max_irr, g.m, largest=False),
        "IR_ct": _extreme(max_irr, g.m, largest=True),
        "i_ct": _extreme(max_ind, g.m, largest=False),
        "beta_ct": _extreme(max_ind, g.m, largest=True),
    }
    return CtProfile(
        mode=s.mode,
        witnesses={k: v[1] for k, v in found.items()},
        counts={
            "minimal_ecd": int(min_ecd.size),
            "maximal_ec_irredundant": int(max_irr.size),
            "maximal_ec_independent": int(max_ind.size),
        },
        **{k: v[0] for k, v in found.items()},
    )


def _iter(flags: np.ndarray, m: int) -> Iterator[EdgeSet]:
    for mask in np.flatnonzero(flags).tolist():
        yield EdgeSet(mask, m)


def enumerate_minimal_ecd(g: Graph, cap: int = PROFILE_MAX_M) -> Iterator[EdgeSet]:
    """All minimal edge cut dominating sets in increasing mask order."""
    return _iter(scan(g, InterpretationMode.LITERAL, cap).minimal_ecd, g.m)


def enumerate_maximal_ec_irredundant(g: Graph, mode=InterpretationMode.LITERAL, cap: int = PROFILE_MAX_M) -> Iterator[EdgeSet]:
    return _iter(scan(g, InterpretationMode(mode), cap).maximal_ec_irredundant, g.m)


def enumerate_maximal_ec_independent(g: Graph, mode=InterpretationMode.LITERAL, cap: int = PROFILE_MAX_M) -> Iterator[EdgeSet]:
    return _iter(scan(g, InterpretationMode(mode), cap).maximal_ec_independent, g.m)
