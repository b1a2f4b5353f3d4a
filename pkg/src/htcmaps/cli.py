"""Command-line interface.

Exit codes: 0 success, 1 validation or semantic error, 2 syntax error,
3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import checks
from .dynamics import FixedInterval, census
from .errors import EnumerationCapExceeded, HTCMapError, MapSyntaxError
from .forcing import RULES, compare_orders, forced
from .graph import Path, edge_label, fundamental_cycles, reduction_trace, rotate_to_lowest_vertex, spanning_tree
from .mapfile import load_map_file, parse_map_file
from .markov import mat_pow, omm, trace
from .search import run_search
from .vertex_map import image_of_path, is_htc

EXIT_OK, EXIT_SEMANTIC, EXIT_SYNTAX, EXIT_VERIFY = 0, 1, 2, 3


def _fmt_pair(p: Path, i: int | None) -> str:
    if not p:
        return "∅"
    labels = [edge_label(s) for s in p.steps]
    if i is not None:
        labels[i] = "(" + labels[i]
        labels[i + 1] = labels[i + 1] + ")"
    return " ".join(labels)


def collapse_lines(m, cycle: Path) -> list[str]:
    """The displayed computation of ``f(cycle)`` collapsing step by step."""
    lhs = f"f({cycle})"
    pad = " " * len(lhs)
    pieces = [m.image(s) for s in cycle.steps]
    joined = Path(tuple(s for p in pieces for s in p.steps))
    lines = [
        f"{lhs} = " + " ".join(f"f({edge_label(s)})" for s in cycle.steps),
        f"{pad} = " + "".join(f"({p})" for p in pieces),
        f"{pad} = {joined}",
    ]
    trace_steps = reduction_trace(joined)
    for j, (p, i) in enumerate(trace_steps):
        if j == 0 and i is None:
            break
        if i is not None:
            lines.append(f"{pad} ~ {_fmt_pair(p, i)}")
        elif j:
            lines.append(f"{pad} ~ {p}")
    return lines


def cmd_check(args, out) -> int:
    mf = load_map_file(args.file)
    raw_unreduced = [k for k, p in enumerate(mf.images, start=1) if not p.is_reduced]
    m = mf.to_map()
    g = m.graph
    print(f"graph {mf.name or '(unnamed)'}: v = {g.v}, n = {g.n}, independent cycles c = {g.cycle_rank}", file=out)
    print(f"vertex permutation {m.theta} (order {m.theta.order}"
          f"{', one cycle' if m.theta.is_cyclic else ''})", file=out)
    if raw_unreduced:
        print("note: images of " + ", ".join(f"E{k}" for k in raw_unreduced) + " were reduced", file=out)
    print("validation: ok", file=out)
    tree = spanning_tree(g)
    print("spanning tree: " + " ".join(f"E{k}" for k in sorted(tree.edges)), file=out)
    verdict = is_htc(m)
    for idx, b in enumerate(fundamental_cycles(g, tree), start=1):
        cyc = rotate_to_lowest_vertex(g, b.cycle)
        img = image_of_path(m, cyc)
        print(f"\ncycle c{idx} = {cyc}  (non-tree edge E{b.edge}, vector {list(b.vector)})", file=out)
        for line in collapse_lines(m, cyc):
            print("  " + line, file=out)
        if img:
            print(f"  image does not collapse: {img}", file=out)
    print(f"\nHTC: {'yes' if verdict else 'no'}", file=out)
    return EXIT_OK


def cmd_omm(args, out) -> int:
    m = load_map_file(args.file).to_map()
    M = mat_pow(omm(m), args.power)
    label = "M" if args.power == 1 else f"M^{args.power}"
    print(f"{label} =", file=out)
    print(M, file=out)
    print(f"trace({label}) = {trace(M)}", file=out)
    return EXIT_OK


def cmd_forced(args, out) -> int:
    v = args.v
    bound = args.bound if args.bound is not None else 3 * v
    if args.rule == "compare":
        cmp = compare_orders(v, bound)
        print(f"v = {v}, bound = {bound}", file=out)
        print(f"{'m':>6}  {'shark':>5}  {'tree':>5}  {'htc':>5}", file=out)
        for m, s, t, h in cmp.rows:
            if s or t or h:
                print(f"{m:>6}  {'x' if s else '.':>5}  {'x' if t else '.':>5}  {'x' if h else '.':>5}", file=out)
        for rule in RULES:
            print(f"{rule} below v: {sorted(x for x in cmp.column(rule) if x < v)}", file=out)
        diff = [r[0] for r in cmp.disagreements()]
        print(f"disagreements: {diff}", file=out)
        return EXIT_OK
    fs = forced(args.rule, v, bound)
    members = fs.members()
    print(f"v = {v}, rule = {args.rule}, bound = {bound}", file=out)
    print(f"below v: {[x for x in members if x < v]}", file=out)
    print(f"v itself: {'member' if v in fs else 'not a member'}", file=out)
    print(f"above v: {[x for x in members if x > v]}", file=out)
    return EXIT_OK


def cmd_census(args, out) -> int:
    m = load_map_file(args.file).to_map()
    cen = census(m, args.max_period, cap=args.cap, witness_limit=args.limit)
    print(f"minimal periods up to {args.max_period}: {cen.periods()}", file=out)
    for p in cen.periods():
        wit = cen.witnesses(p)
        shown = wit[: args.show]
        more = f" ... (+{len(wit) - len(shown)})" if len(wit) > len(shown) else ""
        print(f"period {p}: {len(wit)} witness(es): " + ", ".join(
            f"interval {w}" if isinstance(w, FixedInterval) else str(w) for w in shown) + more, file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    m = load_map_file(args.file).to_map()
    names = [s for s in args.theorems.split(",") if s.strip()] if args.theorems else None
    try:
        results = checks.run_checks(m, names)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
    for r in results:
        print(r, file=out)
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed or skipped", file=out)
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_search(args, out) -> int:
    graph = load_map_file(args.graph).graph if args.graph else None
    report = run_search(
        v=args.v,
        budget=args.budget,
        seed=args.seed,
        max_image_len=args.max_image_len,
        period_bound=args.period_bound,
        extra_edges=args.extra_edges,
        graph=graph,
        walk_cap=args.walk_cap,
        time_budget=args.time_budget,
        max_v=args.max_v,
    )
    print(f"v = {report.v}, budget = {report.budget}, seed = {report.seed}, period bound = {report.period_bound}",
          file=out)
    print(f"tree-forced periods <= bound: {report.tree_forced}", file=out)
    print(f"htc-forced periods <= bound:  {report.htc_forced}", file=out)
    inconclusive = [c.index for c in report.candidates if c.status == "inconclusive"]
    print(f"candidates: {len(report.candidates)}, flagged: {len(report.flagged)}, "
          f"inconclusive: {len(inconclusive)}, status: {report.status}", file=out)
    for c in report.flagged:
        print(f"flagged candidate {c.index} ({c.kind}): missing tree-forced {c.missing_tree}"
              f"{' and htc-forced ' + str(c.missing_htc) if c.missing_htc else ''}", file=out)
    if report.theorem_violations:
        print("WARNING: candidates miss htc-forced periods; re-check them independently", file=out)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(report.to_dict(), fh, indent=2)
        print(f"report written to {args.out}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="htcmaps", description="Periodic orbits of HTC vertex maps on graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="validate a map file and test whether it is HTC")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("omm", help="print the oriented Markov matrix or a power of it")
    s.add_argument("file")
    s.add_argument("--power", type=int, default=1)
    s.set_defaults(func=cmd_omm)

    s = sub.add_parser("forced", help="periods forced by v under an ordering")
    s.add_argument("rule", choices=list(RULES) + ["compare"])
    s.add_argument("v", type=int)
    s.add_argument("--bound", type=int, default=None, help="largest period listed (default 3v)")
    s.set_defaults(func=cmd_forced)

    s = sub.add_parser("census", help="exact periodic points by minimal period")
    s.add_argument("file")
    s.add_argument("--max-period", type=int, required=True)
    s.add_argument("--limit", type=int, default=None, help="stop after this many witnesses per period")
    s.add_argument("--show", type=int, default=5, help="witnesses printed per period")
    s.add_argument("--cap", type=int, default=10**6, help="closed walks examined per length")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("verify", help="run lemma and theorem checks on a map")
    s.add_argument("file")
    s.add_argument("--theorems", default=None, help="comma-separated, e.g. theorem1,lemma2 (default: all)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="bounded search for maps missing tree-forced periods")
    s.add_argument("--v", type=int, required=True)
    s.add_argument("--budget", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--max-image-len", type=int, default=4)
    s.add_argument("--period-bound", type=int, required=True)
    s.add_argument("--extra-edges", type=int, default=3)
    s.add_argument("--graph", default=None, help="use this map file's graph for every candidate")
    s.add_argument("--walk-cap", type=int, default=200_000)
    s.add_argument("--time-budget", type=float, default=None, help="seconds")
    s.add_argument("--max-v", type=int, default=12)
    s.add_argument("--out", default=None, help="write the JSON report here")
    s.set_defaults(func=cmd_search)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except MapSyntaxError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except (HTCMapError, ValueError, OSError) as exc:
        if isinstance(exc, EnumerationCapExceeded):
            print(f"error: {exc}; lower the period or raise --cap", file=sys.stderr)
        else:
            print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC


if __name__ == "__main__":
    sys.exit(main())
