#!/usr/bin/env python3
"""Tabulate z-asymmetric t-cores by size, with the product-form check."""

import argparse

from twistchar.partitions import size
from twistchar.series import enum_z_cores, gf_z_cores


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--z", type=int, default=1)
    ap.add_argument("--t", type=int, default=5)
    ap.add_argument("--bound", type=int, default=60)
    args = ap.parse_args()

    cores = enum_z_cores(args.z, args.t, args.bound)
    counts: dict[int, int] = {}
    for la in cores:
        counts[size(la)] = counts.get(size(la), 0) + 1
    gf = None
    if 0 <= args.z <= args.t - 2:
        gf = gf_z_cores(args.z, args.t, args.bound)

    print(f"z={args.z} t={args.t}: {len(cores)} cores up to size {args.bound}")
    for m in sorted(counts):
        tail = "" if gf is None else f"  gf={gf[m]}"
        print(f"{m:4d} {counts[m]:3d}{tail}  {'#' * counts[m]}")
    if cores:
        largest = max(cores, key=size)
        print("largest:", largest)


if __name__ == "__main__":
    main()
