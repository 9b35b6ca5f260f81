#!/usr/bin/env python3
"""Compare the two determinant strategies on random exact matrices."""

import argparse
import random
import time
from fractions import Fraction

from twistchar.linalg import det


def timed(rows, strategy: str):
    t0 = time.perf_counter()
    value = det(rows, strategy=strategy)
    return time.perf_counter() - t0, value


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=9)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    print(f"{'n':>3} {'gauss (s)':>12} {'bareiss (s)':>12}")
    for n in range(2, args.max_size + 1):
        rows = [
            [Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)]
            for _ in range(n)
        ]
        best = {}
        vals = {}
        for strategy in ("gauss", "bareiss"):
            runs = [timed(rows, strategy) for _ in range(args.repeats)]
            best[strategy] = min(t for t, _ in runs)
            vals[strategy] = runs[0][1]
        assert vals["gauss"] == vals["bareiss"]
        print(f"{n:3d} {best['gauss']:12.5f} {best['bareiss']:12.5f}")


if __name__ == "__main__":
    main()
