"""Decision procedures for edge sets: domination, cuts, minimality, private
neighbours, irredundance, and edge cut irredundance/independence.

Two readings are supported for the edge cut irredundant / independent
properties.  ``LITERAL`` checks the per-edge condition exactly as defined
(every member is irredundant/independent, or removing it leaves a non-cut).
``STRICT`` additionally demands that the set itself be an edge cut.  Without
that extra conjunct any non-cut set qualifies vacuously, since no subset of a
non-cut is a cut.
"""

from __future__ import annotations

from enum import Enum

from .graph import EdgeSet, Graph, component_count, is_connected

__all__ = [
    "InterpretationMode",
    "PreconditionError",
    "has_private_neighbor",
    "is_ec_independent",
    "is_ec_irredundant",
    "is_edge_cut",
    "is_edge_cut_dominating",
    "is_edge_dominating",
    "is_independent_in",
    "is_irredundant_set",
    "is_maximal_ec_independent",
    "is_maximal_ec_irredundant",
    "is_minimal_ecd",
    "private_neighbors",
]


class InterpretationMode(str, Enum):
    LITERAL = "literal"
    STRICT = "strict"


class PreconditionError(ValueError):
    """An input violated an operation's precondition."""


def _connected(g: Graph) -> None:
    if not is_connected(g):
        raise PreconditionError("edge cuts are only defined for connected graphs")


def is_edge_dominating(g: Graph, f: EdgeSet) -> bool:
    g.check_owner(f)
    covered = f.bits
    for e in f:
        covered |= g.nbr_masks[e]
    return covered == (1 << g.m) - 1


def is_edge_cut(g: Graph, f: EdgeSet) -> bool:
    _connected(g)
    return component_count(g, f) >= 2


def is_edge_cut_dominating(g: Graph, f: EdgeSet) -> bool:
    return is_edge_cut(g, f) and is_edge_dominating(g, f)


def is_minimal_ecd(g: Graph, f: EdgeSet) -> bool:
    if not is_edge_cut_dominating(g, f):
        raise PreconditionError(f"{f} is not an edge cut dominating set")
    return all(
        not is_edge_dominating(g, f.remove(e)) or not is_edge_cut(g, f.remove(e))
        for e in f
    )


def is_independent_in(g: Graph, f: EdgeSet, e: int) -> bool:
    """True iff ``e`` meets no other member of ``f``."""
    return g.nbr_masks[e] & f.bits == 0


def private_neighbors(g: Graph, f: EdgeSet, e: int) -> EdgeSet:
    """Edges outside ``f`` adjacent to ``e`` and to no other member of ``f``."""
    g.check_owner(f)
    if e not in f:
        raise PreconditionError(f"edge {e} is not a member of {f}")
    bits = 0
    for x in EdgeSet(g.nbr_masks[e] & ~f.bits, g.m):
        if g.nbr_masks[x] & f.bits == 1 << e:
            bits |= 1 << x
    return EdgeSet(bits, g.m)


def has_private_neighbor(g: Graph, f: EdgeSet, e: int) -> bool:
    return bool(private_neighbors(g, f, e)) or is_independent_in(g, f, e)


def is_irredundant_set(g: Graph, f: EdgeSet) -> bool:
    return all(has_private_neighbor(g, f, e) for e in f)


def _ec_property(g: Graph, f: EdgeSet, mode: InterpretationMode, member_ok) -> bool:
    _connected(g)
    g.check_owner(f)
    if InterpretationMode(mode) is InterpretationMode.STRICT and not is_edge_cut(g, f):
        return False
    return all(member_ok(e) or not is_edge_cut(g, f.remove(e)) for e in f)


def is_ec_irredundant(g: Graph, f: EdgeSet, mode=InterpretationMode.LITERAL) -> bool:
    return _ec_property(g, f, mode, lambda e: has_private_neighbor(g, f, e))


def is_ec_independent(g: Graph, f: EdgeSet, mode=InterpretationMode.LITERAL) -> bool:
    return _ec_property(g, f, mode, lambda e: is_independent_in(g, f, e))


def is_maximal_ec_irredundant(g: Graph, f: EdgeSet, mode=InterpretationMode.LITERAL) -> bool:
    if not is_ec_irredundant(g, f, mode):
        raise PreconditionError(f"{f} is not edge cut irredundant ({InterpretationMode(mode).value})")
    return not any(is_ec_irredundant(g, f.add(e), mode) for e in f.complement())


def is_maximal_ec_independent(g: Graph, f: EdgeSet, mode=InterpretationMode.LITERAL) -> bool:
    if not is_ec_independent(g, f, mode):
        raise PreconditionError(f"{f} is not edge cut independent ({InterpretationMode(mode).value})")
    return not any(is_ec_independent(g, f.add(e), mode) for e in f.complement())
