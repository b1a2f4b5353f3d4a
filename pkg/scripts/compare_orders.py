"""Tabulate where the Sharkovsky, tree and HTC orders disagree, for v in a range.

    python scripts/compare_orders.py --lo 1 --hi 64
"""
import argparse

from htcmaps.forcing import compare_orders


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--lo", type=int, default=1)
    ap.add_argument("--hi", type=int, default=40)
    args = ap.parse_args()

    print(f"{'v':>4}  {'sharkovsky only':<28} {'tree but not htc':<20}")
    for v in range(args.lo, args.hi + 1):
        cmp = compare_orders(v, 3 * v)
        s, t, h = (set(cmp.column(r)) - {v} for r in ("sharkovsky", "tree", "htc"))
        assert h <= t <= s, v
        assert all(x < v for x in s ^ h), v
        if s != h:
            print(f"{v:>4}  {str(sorted(s - t)):<28} {str(sorted(t - h)):<20}")


if __name__ == "__main__":
    main()
