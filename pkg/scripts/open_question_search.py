"""Bounded hunt for HTC maps whose periods miss something forced on trees.

Sweeps v over a range, runs the search harness for each, and writes any
flagged candidate map files to ``--out-dir`` for independent re-checking.

    python scripts/open_question_search.py --v 3 4 5 6 7 --budget 200 --period-bound 10
"""
import argparse
import json
import pathlib
import time

from htcmaps.search import run_search


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--v", type=int, nargs="+", default=[3, 5, 6, 7])
    ap.add_argument("--budget", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--period-bound", type=int, default=8)
    ap.add_argument("--max-image-len", type=int, default=4)
    ap.add_argument("--time-budget", type=float, default=None)
    ap.add_argument("--out-dir", default="search_out")
    args = ap.parse_args()

    out = pathlib.Path(args.out_dir)
    summary = []
    for v in args.v:
        t0 = time.perf_counter()
        rep = run_search(v, args.budget, seed=args.seed, max_image_len=args.max_image_len,
                         period_bound=args.period_bound, time_budget=args.time_budget)
        dt = time.perf_counter() - t0
        inconclusive = sum(c.status == "inconclusive" for c in rep.candidates)
        print(f"v = {v}: {len(rep.candidates)} candidates, {len(rep.flagged)} flagged, "
              f"{inconclusive} inconclusive, tree-forced {rep.tree_forced} ({dt:.1f}s, {rep.status})")
        for c in rep.flagged:
            out.mkdir(parents=True, exist_ok=True)
            (out / f"v{v}_cand{c.index}.map").write_text(c.map_file)
        summary.append({"v": v, "flagged": [c.index for c in rep.flagged], "status": rep.status})
    if any(s["flagged"] for s in summary):
        out.mkdir(parents=True, exist_ok=True)
        (out / "summary.json").write_text(json.dumps(summary, indent=2))
        print(f"flagged candidates written to {out}/")


if __name__ == "__main__":
    main()
