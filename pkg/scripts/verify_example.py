"""Recompute everything about the bundled five-vertex example and print it.

    python scripts/verify_example.py [--max-period 10]
"""
import argparse
import time

from htcmaps.checks import run_checks
from htcmaps.dynamics import census
from htcmaps.mapfile import load_map_file
from htcmaps.markov import build_omg, construct_nonrepetitive_walk, omm, trace
from htcmaps.vertex_map import is_htc


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-period", type=int, default=10)
    args = ap.parse_args()

    m = load_map_file("ghat.map").to_map()
    M = omm(m)
    print(M)
    print(f"trace = {trace(M)}, HTC = {is_htc(m)}")

    omg = build_omg(m)
    for r in range(6, args.max_period + 1):
        w = construct_nonrepetitive_walk(omg, 0, 5, r)
        print(f"r = {r:2}: {w}")

    t0 = time.perf_counter()
    c = census(m, args.max_period, witness_limit=1)
    print(f"minimal periods up to {args.max_period}: {c.periods()}  ({time.perf_counter() - t0:.2f}s)")
    for res in run_checks(m):
        print(res)


if __name__ == "__main__":
    main()
