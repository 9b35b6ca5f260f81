"""Command-line front end: classify, verify, scan, series.

Exit codes: 0 success, 1 usage or validation error, 2 mathematical
mismatch, 3 point-sampling exhaustion.  Machine output is line-delimited
JSON and is byte-identical across runs with the same flags and seeds.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .characters import SamplingError
from .factorization import TheoremId, length_bound, verify
from .partitions import (
    classify_core,
    frobenius,
    partitions_up_to,
    residue_counts,
    size,
    t_core,
    t_quotient,
)
from .series import SeriesZ, enum_z_cores, gf_z_cores
from .partitions import is_z_asymmetric, partitions_of


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; reserve 2 for math mismatches.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse partition literal {text!r}")
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {parts}")
    return parts


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise ValueError(f"bad integer list for {flag}: {text!r}")


def _partition_str(la: tuple[int, ...]) -> str:
    return "(" + ",".join(str(p) for p in la) + ")"


def _emit(records, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            for rec in records:
                fh.write(json.dumps(rec, separators=(",", ":")) + "\n")


def cmd_classify(args) -> int:
    la = parse_partition(args.partition)
    t, n = args.t, args.n
    if t < 2 or n < 1:
        print(f"classify: need t >= 2 and n >= 1, got t={t}, n={n}", file=sys.stderr)
        return 1
    if len(la) > t * n:
        print(f"classify: partition has {len(la)} parts, limit is tn = {t * n}", file=sys.stderr)
        return 1
    cls = classify_core(la, t, n)
    quo = t_quotient(la, t, t * n)
    fro = frobenius(la)
    prof = residue_counts(la, t, t * n)
    if args.json:
        rec = {
            "partition": list(la),
            "t": t,
            "n": n,
            "core": list(cls.core),
            "quotient": [list(q) for q in quo],
            "frobenius": {"arms": list(fro.alpha), "legs": list(fro.beta)},
            "residue_counts": list(prof.counts),
            "empty": cls.empty,
            "single_row": cls.single_row,
            "symplectic": cls.symplectic,
            "orthogonal": cls.orthogonal,
            "self_conjugate": cls.self_conjugate,
            "rank": cls.rank,
        }
        print(json.dumps(rec, separators=(",", ":")))
        return 0
    flags = [
        name
        for name, on in [
            ("Empty", cls.empty),
            (f"SingleRow({cls.single_row})", cls.single_row is not None),
            ("Symplectic", cls.symplectic),
            ("Orthogonal", cls.orthogonal),
            ("SelfConjugate", cls.self_conjugate),
        ]
        if on
    ]
    print(f"partition      {_partition_str(la)}  size {size(la)}")
    print(f"t, n           {t}, {n}")
    print(f"core           {_partition_str(cls.core)}")
    print(f"quotient       ({', '.join(_partition_str(q) for q in quo)})")
    print(f"frobenius      ({','.join(map(str, fro.alpha))} | {','.join(map(str, fro.beta))})")
    print(f"residue counts {tuple(prof.counts)}  (padding {t * n})")
    print(f"class          {', '.join(flags) if flags else '(none)'}")
    print(f"rank           {cls.rank}")
    return 0


def _report_record(th: TheoremId, la, t: int, n: int, seed: int, trials: int) -> dict:
    rep = verify(th, la, t, n, seed=seed, trials=trials)
    return rep.as_dict()


def cmd_verify(args) -> int:
    la = parse_partition(args.partition)
    th = TheoremId(args.theorem)
    rec = _report_record(th, la, args.t, args.n, args.seed, args.trials)
    _emit([rec], args.out)
    if args.json:
        print(json.dumps(rec, separators=(",", ":")))
    else:
        print(f"theorem        {th.value}")
        print(f"partition      {_partition_str(la)}  t={args.t}  n={args.n}")
        print(f"seed, trials   {args.seed}, {args.trials}")
        print(f"vanishing      {rec['predicted_vanishing']}")
        print(f"sign exponent  {rec['sign_exponent']}  sigma {rec['sigma_sign']}")
        print(f"lhs            {rec['lhs']}")
        print(f"rhs            {rec['rhs']}")
        print(f"match          {rec['match']}")
    return 0 if rec["match"] else 2


def _scan_case(item) -> dict:
    th_value, la, t, n, seed, trials = item
    return _report_record(TheoremId(th_value), la, t, n, seed, trials)


def _scan_items(theorems, ts, ns, max_size, seeds, trials):
    items = []
    for th in theorems:
        for t in ts:
            for n in ns:
                las = list(partitions_up_to(max_size, max_length=length_bound(th, t, n)))
                for seed in seeds:
                    for la in las:
                        items.append((th.value, la, t, n, seed, trials))
    return items


def cmd_scan(args) -> int:
    if args.theorems.strip() == "all":
        theorems = list(TheoremId)
    else:
        names = [x.strip() for x in args.theorems.split(",") if x.strip()]
        bad = [x for x in names if x not in {th.value for th in TheoremId}]
        if bad:
            raise ValueError(f"unknown theorem names: {bad}")
        theorems = [TheoremId(x) for x in names]
    ts = _parse_int_list(args.t, "--t")
    ns = _parse_int_list(args.n, "--n")
    seeds = _parse_int_list(args.seeds, "--seeds")
    if args.max_size < 0 or args.trials < 1 or not ts or not ns or not seeds:
        raise ValueError("need max-size >= 0, trials >= 1, nonempty t/n/seed lists")
    if any(t < 2 for t in ts) or any(n < 1 for n in ns):
        raise ValueError("need every t >= 2 and n >= 1")

    items = _scan_items(theorems, ts, ns, args.max_size, seeds, args.trials)
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_scan_case, items, chunksize=16))
    else:
        records = [_scan_case(item) for item in items]

    _emit(records, args.out)
    n_match = sum(1 for r in records if r["match"])
    n_vanish = sum(1 for r in records if r["match"] and r["predicted_vanishing"])
    mismatches = [r for r in records if not r["match"]]
    if args.format == "json":
        for rec in records:
            print(json.dumps(rec, separators=(",", ":")))
    else:
        for rec in records:
            status = "MISMATCH" if not rec["match"] else ("vanish" if rec["predicted_vanishing"] else "ok")
            print(
                f"{status:8s} {rec['theorem']:9s} t={rec['t']} n={rec['n']} "
                f"seed={rec['seed']} la={_partition_str(tuple(rec['partition']))}"
            )
    print(
        f"scan: cases={len(records)} match={n_match} "
        f"mismatch={len(mismatches)} vanish_confirmed={n_vanish}",
        file=sys.stderr,
    )
    return 2 if mismatches else 0


def cmd_series(args) -> int:
    z, t, order = args.z, args.t, args.N
    if order < 0:
        raise ValueError(f"need N >= 0, got {order}")
    if t < 2:
        raise ValueError(f"need t >= 2, got {t}")
    cores = enum_z_cores(z, t, order)
    counts: dict[int, int] = {}
    for la in cores:
        counts[size(la)] = counts.get(size(la), 0) + 1
    lattice = SeriesZ.from_counts(counts, order)
    brute = [0] * (order + 1)
    for m in range(order + 1):
        for la in partitions_of(m):
            if is_z_asymmetric(la, z) and t_core(la, t) == la:
                brute[m] += 1
    product = gf_z_cores(z, t, order).coeffs if 0 <= z <= t - 2 else None

    rows = []
    ok = True
    for m in range(order + 1):
        cols = [brute[m], product[m] if product is not None else None, lattice[m]]
        agree = all(c == cols[0] for c in cols if c is not None)
        ok = ok and agree
        rows.append((m, cols, agree))
    print(f"{'m':>4s} {'enum':>6s} {'product':>8s} {'lattice':>8s}")
    for m, cols, agree in rows:
        prod_txt = "-" if cols[1] is None else str(cols[1])
        mark = "" if agree else "   <- MISMATCH"
        print(f"{m:4d} {cols[0]:6d} {prod_txt:>8s} {cols[2]:8d}{mark}")
    _emit(
        (
            {"m": m, "enum": cols[0], "product": cols[1], "lattice": cols[2], "match": agree}
            for m, cols, agree in rows
        ),
        args.out,
    )
    print(f"series: z={z} t={t} N={order} {'ok' if ok else 'MISMATCH'}", file=sys.stderr)
    return 0 if ok else 2


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twistchar", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", help="print core, quotient, and classification data")
    p.add_argument("partition", help="comma-separated parts, empty string for the empty partition")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="check one identity at seeded sample points")
    p.add_argument("theorem", choices=[th.value for th in TheoremId])
    p.add_argument("partition")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="verify over all partitions below a size bound")
    p.add_argument("--theorems", default="all")
    p.add_argument("--t", required=True, help="comma-separated list")
    p.add_argument("--n", required=True, help="comma-separated list")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--seeds", default="0", help="comma-separated list")
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--jobs", type=int, default=int(os.environ.get("TWISTCHAR_JOBS", "1")))
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("series", help="compare core counts: brute force, product, lattice")
    p.add_argument("--z", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_series)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SamplingError as exc:
        print(f"twistchar: sampling failed: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"twistchar: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
