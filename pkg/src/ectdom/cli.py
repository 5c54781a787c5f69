"""Command line front end: ``ectdom {compute,gen,check,survey}``.

Exit codes: 0 success, 1 a hard claim has a counterexample, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from contextlib import contextmanager

from . import families as fam
from .classical import (
    GAMMA_CT_MAX_M,
    CapExceededError,
    edge_connectivity,
    edge_cover_number,
    edge_domination_number,
    max_matching,
)
from .cutdom import PROFILE_MAX_M, PROFILE_PARAMS, ct_profile, gamma_ct
from .graph import Graph, GraphError, is_connected
from .graph_io import ParseError, iter_graph6, parse_edgelist, parse_graph6, write_edgelist, write_graph6
from .harness import (
    COUNTEREXAMPLE,
    default_corpus,
    graph6_source,
    run_claims,
    select_claims,
    summarize,
)
from .predicates import InterpretationMode, PreconditionError

PARAMS = ("gamma_prime", "lambda", "beta1", "alpha1", "gamma_ct", "profile")
EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@contextmanager
def _open_text(path: str):
    if path == "-":
        yield sys.stdin
    else:
        try:
            fh = open(path, encoding="utf-8", errors="surrogateescape")
        except OSError as err:
            raise UsageError(f"cannot open {path}: {err.strerror}") from None
        with fh:
            yield fh


def _read_graph(path: str, fmt: str) -> Graph:
    with _open_text(path) as fh:
        text = fh.read()
    if fmt == "edgelist":
        return parse_edgelist(text)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise UsageError(f"expected exactly one graph6 line, got {len(lines)}")
    return parse_graph6(lines[0], 1)


def _pairs(g: Graph, f) -> list[list[int]] | None:
    return None if f is None else [list(p) for p in g.pairs(f)]


def _fmt_pairs(pairs) -> str:
    if pairs is None:
        return "-"
    return "{" + ", ".join(f"({u},{v})" for u, v in pairs) + "}"


def cmd_compute(args) -> int:
    params = [p.strip() for p in args.params.split(",") if p.strip()]
    if not params:
        raise UsageError("--params must name at least one parameter")
    for p in params:
        if p not in PARAMS:
            raise UsageError(f"unknown parameter {p!r}; choose from {', '.join(PARAMS)}")
    g = _read_graph(args.input, args.format)
    funcs = {
        "gamma_prime": lambda: edge_domination_number(g, args.gamma_cap),
        "lambda": lambda: edge_connectivity(g),
        "beta1": lambda: max_matching(g),
        "alpha1": lambda: edge_cover_number(g),
        "gamma_ct": lambda: gamma_ct(g, args.gamma_cap),
    }
    out: dict[str, dict] = {}
    for p in params:
        if p == "profile":
            prof = ct_profile(g, args.mode, args.profile_cap)
            for name in PROFILE_PARAMS:
                out[name] = {"value": getattr(prof, name), "witness": _pairs(g, prof.witnesses[name])}
            out["counts"] = dict(prof.counts)
        else:
            r = funcs[p]()
            out[p] = {"value": r.value, "witness": _pairs(g, r.witness)}
    if args.json:
        doc = {"n": g.n, "m": g.m, "mode": InterpretationMode(args.mode).value, "params": out}
        if not args.witness:
            for entry in out.values():
                entry.pop("witness", None)
        print(json.dumps(doc, separators=(",", ":")))
        return EXIT_OK
    for name, entry in out.items():
        if name == "counts":
            print("counts: " + ", ".join(f"{k}={v}" for k, v in entry.items()))
            continue
        value = "undefined" if entry["value"] is None else entry["value"]
        line = f"{name} = {value}"
        if args.witness:
            line += f"  witness {_fmt_pairs(entry['witness'])}"
        print(line)
    return EXIT_OK


def cmd_gen(args) -> int:
    family = args.family
    try:
        if family in ("complete", "cycle", "path", "wheel"):
            params = (args.n,)
        elif family == "complete_bipartite":
            params = (args.m, args.n)
        elif family == "two_cliques":
            params = (args.m, args.n, args.len)
        else:
            params = ()
        if any(p is None for p in params):
            raise UsageError(f"family {family} needs parameters: {_FAMILY_FLAGS[family]}")
        g = fam.build(family, *params)
    except GraphError as err:
        raise UsageError(str(err)) from None
    if args.format == "graph6":
        sys.stdout.write(write_graph6(g) + "\n")
    else:
        sys.stdout.write(write_edgelist(g))
    return EXIT_OK


_FAMILY_FLAGS = {
    "complete": "--n",
    "cycle": "--n",
    "path": "--n",
    "wheel": "--n",
    "complete_bipartite": "--m --n",
    "two_cliques": "--m --n --len",
    "figure1": "none",
    "figure2": "none",
}


def cmd_check(args) -> int:
    claims = select_claims(args.claims.split(",")) if args.claims else None
    if args.graph6 is not None:
        with _open_text(args.graph6) as fh:
            items, errors = graph6_source(fh)
        for err in errors:
            print(f"error: {err}", file=sys.stderr)
        if errors:
            return EXIT_USAGE
    else:
        if args.max_n == 7 and not args.with_n7:
            raise UsageError("--max-n 7 needs --with-n7")
        if not 2 <= args.max_n <= 7:
            raise UsageError("--max-n must be between 2 and 7")
        items = default_corpus(args.max_n, with_n7=args.with_n7)
    reports = run_claims(claims, items, args.mode, args.gamma_cap, args.profile_cap, args.workers)
    summary = summarize(reports, strict_claims=args.strict_claims)
    if args.json:
        for r in reports:
            print(r.to_json(timing=args.timing))
    else:
        _print_table(reports, summary, args)
    return EXIT_COUNTEREXAMPLE if summary["hard_failures"] else EXIT_OK


def _print_table(reports, summary, args) -> None:
    mode = InterpretationMode(args.mode).value
    print(f"mode: {mode}")
    print(f"{'claim':<6} {'kind':<5} {'verified':>9} {'counterex':>10} {'n/a':>6} {'cap':>6}")
    hard = {r.claim_id: r.hard for r in reports}
    for cid, row in summary["totals"].items():
        kind = "hard" if hard[cid] or args.strict_claims else "soft"
        print(f"{cid:<6} {kind:<5} {row['verified']:>9} {row['counterexample']:>10} "
              f"{row['skipped-not-applicable']:>6} {row['skipped-cap']:>6}")
    shown = 0
    for r in reports:
        if r.status != COUNTEREXAMPLE:
            continue
        if shown == 0:
            print("counterexamples:")
        if shown < args.show:
            print(f"  {r.claim_id} {r.graph_id} {json.dumps(r.values, separators=(',', ':'))}")
        shown += 1
    if shown > args.show:
        print(f"  ... {shown - args.show} more (use --json for all)")
    failures = summary["hard_failures"]
    print("hard claims: " + ("FAILED" if failures else "all verified"))


def _survey_row(g: Graph, args) -> dict:
    row = {"graph6": write_graph6(g), "n": g.n, "m": g.m}
    if g.n < 2 or not is_connected(g):
        row["status"] = "skipped-disconnected"
        return row
    if g.m > args.gamma_cap:
        row["status"] = "skipped-cap"
        return row
    gp = edge_domination_number(g, args.gamma_cap).value
    lam = edge_connectivity(g).value
    gct = gamma_ct(g, args.gamma_cap).value
    a1 = edge_cover_number(g).value
    row.update(
        status="ok",
        gamma_prime=gp,
        **{"lambda": lam},
        gamma_ct=gct,
        alpha1=a1,
        gp_eq_gct=gp == gct,
        lam_eq_gct=lam == gct,
        gct_eq_a1m1=gct == a1 - 1,
    )
    return row


def cmd_survey(args) -> int:
    bad = 0
    if not args.json:
        print("graph6\tn\tm\tgamma'\tlambda\tgamma_ct\tg'=gct\tlam=gct\tgct=a1-1")
    with _open_text(args.input) as fh:
        for doc in iter_graph6(fh):
            if isinstance(doc, ParseError):
                print(f"error: {doc}", file=sys.stderr)
                bad += 1
                continue
            row = _survey_row(doc.graph, args)
            if args.json:
                print(json.dumps(row, separators=(",", ":")))
            elif row["status"] != "ok":
                print(f"{row['graph6']}\t{row['n']}\t{row['m']}\t{row['status']}")
            else:
                flags = ["yes" if row[k] else "no" for k in ("gp_eq_gct", "lam_eq_gct", "gct_eq_a1m1")]
                print("\t".join(map(str, [row["graph6"], row["n"], row["m"], row["gamma_prime"],
                                          row["lambda"], row["gamma_ct"], *flags])))
    return EXIT_USAGE if bad else EXIT_OK


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ectdom", description="Exact edge cut domination parameters.")
    sub = parser.add_subparsers(dest="command", required=True)

    def caps(p):
        p.add_argument("--gamma-cap", type=_positive, default=GAMMA_CT_MAX_M,
                       help="max edges for ascending searches (gamma', gamma_ct)")
        p.add_argument("--profile-cap", type=_positive, default=PROFILE_MAX_M,
                       help="max edges for full 2^m extremal scans")

    def mode(p):
        p.add_argument("--mode", choices=[m.value for m in InterpretationMode], default="literal")

    p = sub.add_parser("compute", help="compute parameters of one graph")
    p.add_argument("input", nargs="?", default="-", help="graph file, '-' for stdin")
    p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    p.add_argument("--params", default="gamma_ct", help=f"comma list of {','.join(PARAMS)}")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--json", action="store_true")
    mode(p)
    caps(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("gen", help="emit a family graph")
    p.add_argument("--family", required=True, choices=fam.FAMILIES)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--len", type=int)
    p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", help="verify the claim catalogue")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--with-n7", action="store_true")
    p.add_argument("--claims", help="comma list such as C1,C9")
    p.add_argument("--graph6", metavar="PATH", help="check graphs from a graph6 stream instead ('-' for stdin)")
    p.add_argument("--strict-claims", action="store_true", help="treat soft claims as hard")
    p.add_argument("--workers", type=_positive, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timing", action="store_true", help="fill the ms field (breaks byte-identical reruns)")
    p.add_argument("--show", type=int, default=20, help="counterexamples listed in the table view")
    mode(p)
    caps(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("survey", help="parameter table over a graph6 stream")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--json", action="store_true")
    caps(p)
    p.set_defaults(func=cmd_survey)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream reader closed early (e.g. `| head`); silence the flush at exit
        os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return EXIT_OK
    except CapExceededError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ParseError, GraphError, PreconditionError, KeyError) as err:
        msg = err.args[0] if isinstance(err, KeyError) else str(err)
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
