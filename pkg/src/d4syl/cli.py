"""Command-line surface.

    d4syl info    -q 3                      tower parameters and counts
    d4syl classes -q 3 [--check-census]     class census as JSON
    d4syl table   -q 3 -o out.json|out.csv  full character table
    d4syl verify  -q 3 [--full] [--oracles] verification suite

Exit codes: 0 all checks pass, 1 a verification failed, 2 usage or
configuration error.  D4SYL_THREADS bounds worker threads; D4SYL_BACKEND
forces the compiled ("c") or pure-Python ("py") kernel.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import characters, conjugacy, group, serial, verify
from .backend import available_backends
from .errors import D4SylError
from .fields import build_tower


def _factor_prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            if q != 1:
                raise D4SylError(f"{q * p**k} is not a prime power")
            return p, k
    raise D4SylError("q must be at least 2")


def _add_tower_args(sub):
    sub.add_argument("-q", type=int, help="field size q = p^k")
    sub.add_argument("-p", type=int, help="odd prime characteristic")
    sub.add_argument("-k", type=int, help="extension degree over Z/p")
    sub.add_argument("--f", help="comma-separated coefficients of f (constant first)")
    sub.add_argument("--g", help="comma-separated F_q indices of g (constant first)")


def _tower_from_args(args):
    p, k = args.p, args.k
    if args.q is not None:
        fp, fk = _factor_prime_power(args.q)
        if p not in (None, fp) or k not in (None, fk):
            raise D4SylError(f"-q {args.q} conflicts with -p/-k")
        p, k = fp, fk
    if p is None:
        raise D4SylError("specify -q or -p (with optional -k)")
    k = k or 1
    f = [int(c) for c in args.f.split(",")] if args.f else None
    g = [int(c) for c in args.g.split(",")] if args.g else None
    return build_tower(p, k, f, g)


def cmd_info(args):
    ctx = _tower_from_args(args)
    meta = ctx.metadata()
    q = ctx.q
    print(f"p = {meta['p']}, k = {meta['k']}, q = {q}, |group| = q^12 = {group.order(ctx)}")
    print(f"f = {meta['f']} (F_q = Z/p[x]/(f))")
    print(f"g = {meta['g']} (F_q3 = F_q[y]/(g))")
    print(f"eta = {meta['eta']} (coefficients over Z/p)")
    print(f"theta = {meta['theta']}")
    print(f"conjugacy classes = irreducible characters = {conjugacy.class_count(q)}")
    for c, n in sorted(characters.irr_count_by_degree(q).items()):
        print(f"  degree q^{c}: {n}")
    print(f"backends available: {', '.join(available_backends())}")
    return 0


def cmd_classes(args):
    ctx = _tower_from_args(args)
    checks = None
    status = 0
    if args.check_census:
        report = verify.verify_counts(ctx)
        checks = {"count-polynomials": report.passed, "details": report.details}
        if group.order(ctx) <= group.DEFAULT_ENUMERATION_CAP:
            labels = conjugacy.brute_force_classes(ctx)
            idx = conjugacy.classify_all(ctx)
            n_orbits, _ = conjugacy.orbit_summary(labels)
            ok = n_orbits == len(conjugacy.list_classes(ctx)) and bool(
                np.array_equal(idx, idx[labels])
            )
            checks["orbit-partition"] = ok
        if not all(v for v in checks.values() if isinstance(v, bool)):
            status = 1
    doc = serial.classes_to_json(ctx, check_census=checks)
    _emit(doc, args.output)
    return status


def cmd_table(args):
    ctx = _tower_from_args(args)
    if group.order(ctx) > group.DEFAULT_ENUMERATION_CAP and not args.force:
        raise D4SylError(
            "materialising the full table beyond q = 3 is expensive; pass --force"
        )
    table = characters.build_table(ctx)
    if args.output and args.output.endswith(".csv"):
        with open(args.output, "w") as fh:
            fh.write(serial.table_to_csv(table))
    else:
        _emit(serial.table_to_json(table), args.output)
    return 0


def cmd_verify(args):
    ctx = _tower_from_args(args)
    reports = verify.run_suite(ctx, full=args.full, oracles=args.oracles)
    for r in reports:
        print(r)
    return 0 if all(r.passed for r in reports) else 1


def _emit(doc, path):
    text = serial.dump_json(doc, path)
    if text is not None:
        print(text)


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="d4syl",
        description="Exact class census and character table of the order-q^12 "
        "Sylow subgroup attached to the twisted D4 family.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("info", help="print tower parameters and counts")
    _add_tower_args(sub)
    sub.set_defaults(func=cmd_info)

    sub = subs.add_parser("classes", help="emit the class census as JSON")
    _add_tower_args(sub)
    sub.add_argument("--check-census", action="store_true")
    sub.add_argument("-o", "--output")
    sub.set_defaults(func=cmd_classes)

    sub = subs.add_parser("table", help="emit the full character table")
    _add_tower_args(sub)
    sub.add_argument("-o", "--output")
    sub.add_argument("--force", action="store_true", help="allow large tables")
    sub.set_defaults(func=cmd_table)

    sub = subs.add_parser("verify", help="run the verification suite")
    _add_tower_args(sub)
    sub.add_argument("--full", action="store_true", help="exhaustive orthogonality")
    sub.add_argument("--oracles", action="store_true", help="run brute-force oracles")
    sub.set_defaults(func=cmd_verify)

    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except D4SylError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
