"""Claim catalogue C1..C15 and the runner that checks claims over graph sources.

Every checker returns a :class:`ClaimReport`.  Counterexamples carry witness
edge sets that :func:`revalidate` re-checks with the plain predicates in
:mod:`ectdom.predicates`, independently of the kernel tables that found them.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

import numpy as np

from . import families as fam
from .classical import (
    GAMMA_CT_MAX_M,
    CapExceededError,
    ParamResult,
    ascending_search,
    edge_connectivity,
    edge_cover_number,
    edge_domination_number,
    max_matching,
)
from .cutdom import PROFILE_MAX_M, PROFILE_PARAMS, ct_profile, gamma_ct, scan
from .graph import CANONICAL_MAX_N, EdgeSet, Graph, canonical_form, is_connected
from .graph_io import ParseError, iter_graph6, write_graph6
from .predicates import (
    InterpretationMode,
    PreconditionError,
    is_ec_independent,
    is_ec_irredundant,
    is_edge_cut_dominating,
    is_maximal_ec_irredundant,
    is_minimal_ecd,
)

__all__ = [
    "CLAIMS",
    "Claim",
    "ClaimReport",
    "GraphItem",
    "HARD",
    "SOFT",
    "constrained_gamma_prime",
    "default_corpus",
    "graph6_source",
    "revalidate",
    "run_claims",
    "summarize",
]

VERIFIED = "verified"
COUNTEREXAMPLE = "counterexample"
NOT_APPLICABLE = "skipped-not-applicable"
SKIPPED_CAP = "skipped-cap"


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def constrained_gamma_prime(g: Graph, forced_in: EdgeSet, forced_out: EdgeSet) -> ParamResult:
    """Smallest edge dominating set containing ``forced_in`` and avoiding ``forced_out``."""
    g.check_owner(forced_in)
    g.check_owner(forced_out)
    result = ascending_search(g, "constrained_gamma_prime", 0, False, forced_in, forced_out)
    if result is None:
        raise PreconditionError("no edge dominating set satisfies the forced edges")
    return result


# -- graph sources ----------------------------------------------------------

@dataclass
class GraphItem:
    graph: Graph
    graph_id: str
    family: fam.FamilySpec | None = None
    named_set: EdgeSet | None = None
    seq: int = 0
    note: str = ""


def graph_id(g: Graph) -> str:
    if g.n <= CANONICAL_MAX_N:
        return canonical_form(g).hex()
    return write_graph6(g)


def _family_items() -> Iterator[GraphItem]:
    specs = (
        [fam.FamilySpec("complete", (n,)) for n in range(2, 9)]
        + [fam.FamilySpec("cycle", (n,)) for n in range(3, 13)]
        + [fam.FamilySpec("path", (n,)) for n in range(2, 13)]
        + [fam.FamilySpec("wheel", (n,)) for n in range(3, 10)]
        + [fam.FamilySpec("complete_bipartite", (m, n)) for m in range(1, 5) for n in range(1, m + 1)]
        + [fam.FamilySpec("two_cliques", (m, n, k)) for m in range(3, 6) for n in range(3, 6) for k in (1, 2)]
    )
    for spec in specs:
        yield GraphItem(spec.build(), spec.label(), spec)
    for name, make in (("figure1", fam.figure1), ("figure2", fam.figure2)):
        g, named = make()
        yield GraphItem(g, f"{name}()", fam.FamilySpec(name), named)


def default_corpus(max_n: int = 6, with_n7: bool = False, tree_max_n: int = 9) -> list[GraphItem]:
    """Families, figure fixtures, all trees up to ``tree_max_n`` and all connected graphs up to ``max_n``."""
    items = list(_family_items())
    for n in range(2, tree_max_n + 1):
        for t in fam.all_trees(n):
            items.append(GraphItem(t, "tree:" + graph_id(t)))
    for n in range(2, max_n + 1):
        for g in fam.all_connected_graphs(n, allow_n7=with_n7):
            items.append(GraphItem(g, graph_id(g)))
    for i, item in enumerate(items):
        item.seq = i
    return items


def graph6_source(stream) -> tuple[list[GraphItem], list[ParseError]]:
    items, errors = [], []
    for doc in iter_graph6(stream):
        if isinstance(doc, ParseError):
            errors.append(doc)
            continue
        items.append(GraphItem(doc.graph, write_graph6(doc.graph), seq=doc.source_line or 0))
    return items, errors


# -- per-graph cache --------------------------------------------------------

class Context:
    """Lazily computed parameters for one graph, shared between claims."""

    def __init__(self, item: GraphItem, mode: InterpretationMode, gamma_cap: int, profile_cap: int):
        self.item = item
        self.g = item.graph
        self.mode = mode
        self.gamma_cap = gamma_cap
        self.profile_cap = profile_cap
        self._memo: dict[str, object] = {}

    def _get(self, key: str, fn: Callable[[], object]):
        if key not in self._memo:
            self._memo[key] = fn()
        return self._memo[key]

    @property
    def gamma_ct(self) -> ParamResult:
        return self._get("gamma_ct", lambda: gamma_ct(self.g, self.gamma_cap))

    @property
    def gamma_prime(self) -> ParamResult:
        return self._get("gamma_prime", lambda: edge_domination_number(self.g, self.gamma_cap))

    @property
    def lam(self) -> ParamResult:
        return self._get("lambda", lambda: edge_connectivity(self.g))

    @property
    def beta1(self) -> ParamResult:
        return self._get("beta1", lambda: max_matching(self.g))

    @property
    def alpha1(self) -> ParamResult:
        return self._get("alpha1", lambda: edge_cover_number(self.g))

    @property
    def profile(self):
        return self._get("profile", lambda: ct_profile(self.g, self.mode, self.profile_cap))

    @property
    def scan(self):
        return self._get("scan", lambda: scan(self.g, self.mode, self.profile_cap))


# -- claims -----------------------------------------------------------------

Outcome = tuple[bool | None, dict, dict]  # holds (None: hypothesis unmet), values, witnesses


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    hard: bool
    applies: Callable[[GraphItem], bool]
    check: Callable[[Context], Outcome]
    needs_scan: bool = False
    family_only: bool = False

    @property
    def number(self) -> int:
        return int(self.id[1:])


@dataclass
class ClaimReport:
    claim_id: str
    graph_id: str
    status: str
    values: dict = field(default_factory=dict)
    witness: dict = field(default_factory=dict)
    elapsed_ms: float | None = None
    hard: bool = True
    seq: int = 0

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(
            {
                "claim": self.claim_id,
                "graph": self.graph_id,
                "status": self.status,
                "values": self.values,
                "witness_edges": self.witness,
                "ms": round(self.elapsed_ms, 3) if timing and self.elapsed_ms is not None else None,
            },
            separators=(",", ":"),
        )


def _family(*names: str) -> Callable[[GraphItem], bool]:
    return lambda it: it.family is not None and it.family.family in names


def _connected(it: GraphItem) -> bool:
    return it.graph.n >= 2 and is_connected(it.graph)


def _tree(it: GraphItem) -> bool:
    return it.graph.n >= 2 and it.graph.is_tree()


def _edges(ctx: Context, f: EdgeSet | None):
    return None if f is None else [list(p) for p in ctx.g.pairs(f)]


def _c1(ctx: Context) -> Outcome:
    gp, gc = ctx.gamma_prime, ctx.gamma_ct
    return gp.value <= gc.value, {"gamma_prime": gp.value, "gamma_ct": gc.value}, {
        "gamma_prime": _edges(ctx, gp.witness), "gamma_ct": _edges(ctx, gc.witness)}


def _c2(ctx: Context) -> Outcome:
    lam, gc = ctx.lam, ctx.gamma_ct
    return lam.value <= gc.value, {"lambda": lam.value, "gamma_ct": gc.value}, {
        "lambda": _edges(ctx, lam.witness), "gamma_ct": _edges(ctx, gc.witness)}


def _closed_form(expected: Callable[[tuple[int, ...]], int]) -> Callable[[Context], Outcome]:
    def check(ctx: Context) -> Outcome:
        want = expected(ctx.item.family.params)
        gc = ctx.gamma_ct
        return gc.value == want, {"gamma_ct": gc.value, "formula": want}, {"gamma_ct": _edges(ctx, gc.witness)}
    return check


def _cycle_value(p: tuple[int, ...]) -> int:
    (n,) = p
    # C_3 is K_3; the n >= 4 formula does not cover it
    return n - 1 if n == 3 else ceil_div(n, 3)


def _c7(ctx: Context) -> Outcome:
    gp, gc = ctx.gamma_prime, ctx.gamma_ct
    return gp.value == gc.value, {"gamma_prime": gp.value, "gamma_ct": gc.value}, {
        "gamma_prime": _edges(ctx, gp.witness), "gamma_ct": _edges(ctx, gc.witness)}


def _c9(ctx: Context) -> Outcome:
    gc, b1 = ctx.gamma_ct, ctx.beta1
    bound = ctx.g.m - b1.value
    return gc.value <= bound, {"gamma_ct": gc.value, "m": ctx.g.m, "beta1": b1.value, "bound": bound}, {
        "gamma_ct": _edges(ctx, gc.witness), "beta1": _edges(ctx, b1.witness)}


def _c10(ctx: Context) -> Outcome:
    gc, b1, a1 = ctx.gamma_ct, ctx.beta1, ctx.alpha1
    bound = ctx.g.n - b1.value - 1
    holds = gc.value <= bound and bound == a1.value - 1
    return holds, {"gamma_ct": gc.value, "n": ctx.g.n, "beta1": b1.value, "alpha1": a1.value, "bound": bound}, {
        "gamma_ct": _edges(ctx, gc.witness), "alpha1": _edges(ctx, a1.witness)}


def two_clique_formulas(m: int, n: int, path_len: int) -> dict[str, int]:
    if path_len == 1:
        return {"E1": m // 2 + n // 2, "E2": 1 + (m - 1) // 2 + (n - 1) // 2}
    return {
        "E1": m // 2 + n // 2,
        "E2": 1 + (m - 1) // 2 + n // 2,
        "E3": 1 + m // 2 + (n - 1) // 2,
        "E4": 2 + (m - 1) // 2 + (n - 1) // 2,
    }


def two_clique_searches(g: Graph, m: int, n: int, path_len: int) -> dict[str, ParamResult]:
    """|E_i| by direct constrained search over which connecting-path edges are used."""
    none = EdgeSet.empty(g.m)
    if path_len == 1:
        bridge = g.edge_set([(0, m)])
        return {
            "E1": constrained_gamma_prime(g, none, bridge),
            "E2": constrained_gamma_prime(g, bridge, none),
        }
    mid = m + n
    d, e = g.edge_set([(0, mid)]), g.edge_set([(m, mid)])
    return {
        "E1": constrained_gamma_prime(g, none, d | e),
        "E2": constrained_gamma_prime(g, d, e),
        "E3": constrained_gamma_prime(g, e, d),
        "E4": constrained_gamma_prime(g, d | e, none),
    }


def _c11(ctx: Context) -> Outcome:
    m, n, k = ctx.item.family.params
    gp, gc = ctx.gamma_prime, ctx.gamma_ct
    formulas = two_clique_formulas(m, n, k)
    searched = two_clique_searches(ctx.g, m, n, k)
    sizes = {name: r.value for name, r in searched.items()}
    cut_sets = [v for name, v in sizes.items() if name != "E1"]
    parity_ok = (gp.value == gc.value) == (m % 2 == 0 or n % 2 == 0)
    holds = (
        parity_ok
        and sizes == formulas
        and gp.value == min(sizes.values())
        and gc.value == min(cut_sets)
    )
    values = {
        "gamma_prime": gp.value,
        "gamma_ct": gc.value,
        "equal": gp.value == gc.value,
        "some_even": m % 2 == 0 or n % 2 == 0,
        "searched": sizes,
        "formula": formulas,
    }
    witness = {name: _edges(ctx, r.witness) for name, r in searched.items()}
    witness["gamma_ct"] = _edges(ctx, gc.witness)
    return holds, values, witness


def _first_violation(sub: np.ndarray, sup: np.ndarray) -> int | None:
    bad = np.flatnonzero(sub & ~sup)
    return int(bad[0]) if bad.size else None


def _c12(ctx: Context) -> Outcome:
    s = ctx.scan
    bad = _first_violation(s.minimal_ecd, s.maximal_ec_irredundant)
    values = {"minimal_ecd": int(s.minimal_ecd.sum()), "violations": int((s.minimal_ecd & ~s.maximal_ec_irredundant).sum())}
    return bad is None, values, {"set": _edges(ctx, EdgeSet(bad, ctx.g.m)) if bad is not None else None}


def _c13(ctx: Context) -> Outcome:
    s = ctx.scan
    bad = _first_violation(s.maximal_ec_independent, s.minimal_ecd)
    values = {
        "maximal_ec_independent": int(s.maximal_ec_independent.sum()),
        "violations": int((s.maximal_ec_independent & ~s.minimal_ecd).sum()),
    }
    return bad is None, values, {"set": _edges(ctx, EdgeSet(bad, ctx.g.m)) if bad is not None else None}


def _c14(ctx: Context) -> Outcome:
    p = ctx.profile
    vals = p.values()
    witness = {k: _edges(ctx, p.witnesses[k]) for k in PROFILE_PARAMS}
    values = dict(vals)
    values["counts"] = p.counts
    if any(v is None for v in vals.values()):
        values["undefined"] = [k for k, v in vals.items() if v is None]
        return None, values, witness
    chain = [vals[k] for k in PROFILE_PARAMS]
    broken = [f"{a}>{b}" for a, b, x, y in zip(PROFILE_PARAMS, PROFILE_PARAMS[1:], chain, chain[1:]) if x > y]
    values["broken"] = broken
    return not broken, values, witness


def _c15(ctx: Context) -> Outcome:
    g, f, name = ctx.g, ctx.item.named_set, ctx.item.family.family
    if name == "figure1":
        irr = is_ec_irredundant(g, f, ctx.mode)
        maximal = irr and is_maximal_ec_irredundant(g, f, ctx.mode)
        ecd = is_edge_cut_dominating(g, f)
        values = {"ec_irredundant": irr, "maximal_ec_irredundant": maximal, "edge_cut_dominating": ecd}
        holds = maximal and not ecd
    else:
        ecd = is_edge_cut_dominating(g, f)
        minimal = ecd and is_minimal_ecd(g, f)
        ind = is_ec_independent(g, f, ctx.mode)
        values = {"edge_cut_dominating": ecd, "minimal_ecd": minimal, "ec_independent": ind}
        holds = minimal and not ind
    return holds, values, {"named": _edges(ctx, f)}


CLAIMS: tuple[Claim, ...] = (
    Claim("C1", "gamma'(G) <= gamma_ct(G)", True, _connected, _c1),
    Claim("C2", "lambda(G) <= gamma_ct(G)", True, _connected, _c2),
    Claim("C3", "gamma_ct(K_n) = n - 1", True, _family("complete"), _closed_form(lambda p: p[0] - 1), family_only=True),
    Claim("C4", "gamma_ct(C_n) = ceil(n/3) for n >= 4 (C_3 = K_3 gives 2)", True, _family("cycle"), _closed_form(_cycle_value), family_only=True),
    Claim("C5", "gamma_ct(W_n) = ceil((n-4)/3) + 3", False, _family("wheel"), _closed_form(lambda p: ceil_div(p[0] - 4, 3) + 3), family_only=True),
    Claim("C6", "gamma_ct(K_{m,n}) = n for m >= n", True, _family("complete_bipartite"), _closed_form(lambda p: p[1]), family_only=True),
    Claim("C7", "gamma_ct(T) = gamma'(T) for trees", True, _tree, _c7),
    Claim("C8", "gamma_ct(P_n) = ceil((n-1)/3)", True, _family("path"), _closed_form(lambda p: ceil_div(p[0] - 1, 3)), family_only=True),
    Claim("C9", "gamma_ct(G) <= m - beta_1(G) for m > 1", True, lambda it: _connected(it) and it.graph.m > 1, _c9),
    Claim("C10", "gamma_ct(T) <= n - beta_1(T) - 1 = alpha_1(T) - 1 for trees with m > 1", True,
          lambda it: _tree(it) and it.graph.m > 1, _c10),
    Claim("C11", "two cliques joined by a path of length 1 or 2: gamma' = gamma_ct iff m or n even", True,
          _family("two_cliques"), _c11, family_only=True),
    Claim("C12", "every minimal ECD set is a maximal EC-irredundant set", True, _connected, _c12, needs_scan=True),
    Claim("C13", "every maximal EC-independent set is a minimal ECD set", False, _connected, _c13, needs_scan=True),
    Claim("C14", "ir_ct <= gamma_ct <= i_ct <= beta_ct <= Gamma_ct <= IR_ct", False, _connected, _c14, needs_scan=True),
    Claim("C15", "figure fixtures: named sets have exactly their stated properties", True, _family("figure1", "figure2"), _c15, family_only=True),
)

HARD = tuple(c.id for c in CLAIMS if c.hard)
SOFT = tuple(c.id for c in CLAIMS if not c.hard)


def select_claims(ids: Iterable[str] | None = None) -> list[Claim]:
    if ids is None:
        return list(CLAIMS)
    by_id = {c.id: c for c in CLAIMS}
    wanted = []
    for raw in ids:
        key = raw.strip().upper()
        if key not in by_id:
            raise KeyError(f"unknown claim {raw!r}; known: {', '.join(by_id)}")
        wanted.append(by_id[key])
    return sorted(wanted, key=lambda c: c.number)


# -- runner -----------------------------------------------------------------

def _check_item(args) -> list[ClaimReport]:
    item, claim_ids, mode, gamma_cap, profile_cap = args
    claims = select_claims(claim_ids)
    ctx = Context(item, mode, gamma_cap, profile_cap)
    reports = []
    for claim in claims:
        base = dict(claim_id=claim.id, graph_id=item.graph_id, hard=claim.hard, seq=item.seq)
        if not _connected(item):
            if not claim.family_only:
                reports.append(ClaimReport(status=NOT_APPLICABLE, values={"reason": "disconnected"}, **base))
            continue
        if not claim.applies(item):
            continue
        start = time.perf_counter()
        try:
            holds, values, witness = claim.check(ctx)
            status = NOT_APPLICABLE if holds is None else VERIFIED if holds else COUNTEREXAMPLE
        except CapExceededError as err:
            status, values, witness = SKIPPED_CAP, {"reason": str(err)}, {}
        elapsed = (time.perf_counter() - start) * 1000.0
        reports.append(ClaimReport(status=status, values=values, witness=witness, elapsed_ms=elapsed, **base))
    return reports


def run_claims(
    claims: Iterable[Claim] | None,
    source: Iterable[GraphItem],
    mode: InterpretationMode = InterpretationMode.LITERAL,
    gamma_cap: int = GAMMA_CT_MAX_M,
    profile_cap: int = PROFILE_MAX_M,
    workers: int = 1,
) -> list[ClaimReport]:
    """One report per (claim, applicable graph), sorted by claim number then source order."""
    ids = None if claims is None else [c.id for c in claims]
    mode = InterpretationMode(mode)
    jobs = [(item, ids, mode, gamma_cap, profile_cap) for item in source]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_check_item, jobs, chunksize=max(1, len(jobs) // (workers * 8))))
    else:
        batches = [_check_item(job) for job in jobs]
    reports = [r for batch in batches for r in batch]
    reports.sort(key=lambda r: (int(r.claim_id[1:]), r.seq, r.graph_id))
    return reports


def summarize(reports: list[ClaimReport], strict_claims: bool = False) -> dict:
    """Per-claim status totals plus the list of failing hard claims."""
    totals: dict[str, dict[str, int]] = {}
    hard_failures = []
    for r in reports:
        row = totals.setdefault(r.claim_id, {VERIFIED: 0, COUNTEREXAMPLE: 0, NOT_APPLICABLE: 0, SKIPPED_CAP: 0})
        row[r.status] += 1
        if r.status == COUNTEREXAMPLE and (r.hard or strict_claims):
            hard_failures.append(r)
    return {"totals": totals, "hard_failures": hard_failures}


def revalidate(report: ClaimReport, item: GraphItem, mode: InterpretationMode) -> bool:
    """Re-derive a counterexample from its witnesses using only the plain predicates.

    Returns True when the witness really exhibits the violation.
    """
    g = item.graph
    mode = InterpretationMode(mode)

    def es(key: str) -> EdgeSet:
        return g.edge_set(report.witness[key])

    if report.claim_id == "C12":
        f = es("set")
        return is_edge_cut_dominating(g, f) and is_minimal_ecd(g, f) and not (
            is_ec_irredundant(g, f, mode) and is_maximal_ec_irredundant(g, f, mode))
    if report.claim_id == "C13":
        f = es("set")
        from .predicates import is_maximal_ec_independent

        if not (is_ec_independent(g, f, mode) and is_maximal_ec_independent(g, f, mode)):
            return False
        return not is_edge_cut_dominating(g, f) or not is_minimal_ecd(g, f)
    if report.claim_id == "C14":
        from . import predicates as pr

        checks = {
            "gamma_ct": lambda f: pr.is_edge_cut_dominating(g, f),
            "Gamma_ct": lambda f: pr.is_edge_cut_dominating(g, f) and pr.is_minimal_ecd(g, f),
            "ir_ct": lambda f: pr.is_ec_irredundant(g, f, mode) and pr.is_maximal_ec_irredundant(g, f, mode),
            "IR_ct": lambda f: pr.is_ec_irredundant(g, f, mode) and pr.is_maximal_ec_irredundant(g, f, mode),
            "i_ct": lambda f: pr.is_ec_independent(g, f, mode) and pr.is_maximal_ec_independent(g, f, mode),
            "beta_ct": lambda f: pr.is_ec_independent(g, f, mode) and pr.is_maximal_ec_independent(g, f, mode),
        }
        for pair in report.values.get("broken", []):
            lo, hi = pair.split(">")
            a, b = es(lo), es(hi)
            if not (checks[lo](a) and checks[hi](b) and len(a) > len(b)):
                return False
        return bool(report.values.get("broken"))
    return False
