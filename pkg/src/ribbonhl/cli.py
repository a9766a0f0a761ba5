"""Command-line front end.  Every subcommand parses its arguments into domain
objects, calls one library function and prints the result."""
from __future__ import annotations

import argparse
import json
import sys

from . import golden
from .partitions import k_core, k_quotient, parse_composition, parse_partition, parse_partition_tuple
from .qpoly import Polynomial
from .rigged import Configuration, cocharge, fermionic_polynomial, fermionic_restricted, theta
from .ribbons import (
    RibbonTableau,
    cospin_polynomial,
    cospins,
    enumerate_ribbon_tableaux,
    ribbon_inversions,
    stanton_white,
    stanton_white_inverse,
)
from .symfunc import (
    BASES,
    DEFAULT_BUDGET,
    ROUTES,
    BudgetExceeded,
    basis_convert,
    hl_monomial_expansion,
    iter_rectangular_cases,
    specialize,
    untilde,
    verify_column_case,
    verify_rectangular_theorem,
)
from .tuples import TupleTableau, diagonal_classes, inversion_polynomial, inversions, restricted_inversion_polynomial

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, data, text: str) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def _poly(args, p: Polynomial) -> None:
    _emit(args, p.to_json(), p.to_text())


def cmd_cospin(args) -> int:
    _poly(args, cospin_polynomial(parse_partition(args.shape), parse_composition(args.weight), args.k))
    return EXIT_OK


def cmd_inv_poly(args) -> int:
    _poly(args, inversion_polynomial(parse_partition_tuple(args.shape_tuple), parse_composition(args.weight)))
    return EXIT_OK


def cmd_hl(args) -> int:
    lam = parse_partition(args.lam)
    f = hl_monomial_expansion(lam, args.route, args.budget)
    if args.untilde:
        f = untilde(f, lam)
    f = basis_convert(f, args.basis, args.budget)
    if args.at_root:
        f = specialize(f, args.at_root)
    _emit(args, f.to_json(), f.render())
    return EXIT_OK


def cmd_theta(args) -> int:
    weight = parse_composition(args.weight) if args.weight else None
    t = TupleTableau.from_json(args.tuple, weight)
    rc = theta(t)
    data = rc.to_json() | {"cocharge": cocharge(rc), "inversions": inversions(t)}
    _emit(args, data, rc.render() + f"\ncocharge {data['cocharge']}  inversions {data['inversions']}")
    return EXIT_OK


def cmd_psi(args) -> int:
    if args.tableau:
        t = RibbonTableau.from_json(args.tableau)
        image = stanton_white(t)
        _emit(args, image.to_json(), str(image))
        return EXIT_OK
    if args.tuple:
        if args.k is None:
            raise UsageError("--tuple needs --k")
        weight = parse_composition(args.weight) if args.weight else None
        tup = TupleTableau.from_json(args.tuple, weight)
        core = parse_partition(args.core) if args.core else ()
        t = stanton_white_inverse(tup, core, args.k)
        _emit(args, t.to_json(), t.render())
        return EXIT_OK
    if not (args.shape and args.weight and args.k):
        raise UsageError("give --tableau, --tuple, or --shape/--weight/--k")
    shape, weight = parse_partition(args.shape), parse_composition(args.weight)
    tabs = enumerate_ribbon_tableaux(shape, weight, args.k)
    rows = []
    for t, c in zip(tabs, cospins(tabs)):
        rows.append({"tuple": stanton_white(t).to_json(), "cospin": c, "inversions": ribbon_inversions(t)})
    text = "\n".join(f"{json.dumps(r['tuple'])}  cospin {r['cospin']}  inv {r['inversions']}" for r in rows)
    header = f"core {list(k_core(shape, args.k))}  quotient {[list(q) for q in k_quotient(shape, args.k)]}"
    _emit(args, {"core": list(k_core(shape, args.k)), "rows": rows}, header + ("\n" + text if text else ""))
    return EXIT_OK


def cmd_classes(args) -> int:
    classes = diagonal_classes(parse_partition_tuple(args.shape_tuple), parse_composition(args.weight))
    data, lines = [], []
    for cls in classes:
        p = restricted_inversion_polynomial(cls)
        data.append({"vector": cls.vector.to_json(), "size": len(cls), "polynomial": p.to_json()})
        lines.append(f"{str(cls.vector):<30} {len(cls):>4}  {p.to_text()}")
    _emit(args, data, "\n".join(lines) if lines else "(no tuples)")
    return EXIT_OK


def cmd_fermionic(args) -> int:
    weight = parse_composition(args.weight)
    rows = parse_partition(args.rows)
    if args.shapes:
        config = Configuration(parse_partition_tuple(args.shapes), weight, rows)
        _poly(args, fermionic_restricted(config))
    else:
        _poly(args, fermionic_polynomial(weight, rows))
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = []
    if args.suite in ("examples", "all"):
        checks = golden.golden_checks()
        ok = all(c.ok for c in checks)
        reports.append((ok, {"suite": "examples", "checks": [c.__dict__ for c in checks]},
                        f"{'OK' if ok else 'FAIL'}  examples\n" + "\n".join("  " + c.render() for c in checks)))
    cases = []
    if args.suite in ("rectangular", "column"):
        if args.n is None or args.k is None:
            raise UsageError(f"--suite {args.suite} needs --n and --k")
        cases = [(args.suite, args.n, args.k)]
    elif args.suite == "all":
        cases = [("rectangular", n, k) for n, k in iter_rectangular_cases(args.budget)]
        cases += [("column", n, k) for n, k in ((1, 2), (2, 2), (1, 3)) if n * k <= args.budget]
    for suite, n, k in cases:
        fn = verify_rectangular_theorem if suite == "rectangular" else verify_column_case
        r = fn(n, k, args.budget)
        reports.append((r.ok, r.to_json(), r.render()))
    if args.json:
        print(json.dumps([d for _, d, _ in reports], sort_keys=True))
    else:
        print("\n".join(t for _, _, t in reports))
    return EXIT_OK if all(ok for ok, _, _ in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ribbonhl", description="Ribbon tableaux, rigged configurations and Hall-Littlewood functions.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="largest degree for symmetric-function tables")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cospin", parents=[common], help="cospin polynomial of k-ribbon tableaux")
    p.add_argument("--shape", required=True)
    p.add_argument("--weight", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_cospin)

    p = sub.add_parser("inv-poly", parents=[common], help="inversion polynomial of tuples of tableaux")
    p.add_argument("--shape-tuple", required=True, help='JSON, e.g. "[[2],[3,2],[2]]"')
    p.add_argument("--weight", required=True)
    p.set_defaults(func=cmd_inv_poly)

    p = sub.add_parser("hl", parents=[common], help="Hall-Littlewood function Q~'_lambda")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--basis", choices=BASES, default="m")
    p.add_argument("--route", choices=ROUTES, default="inversion")
    p.add_argument("--untilde", action="store_true", help="print Q' instead of Q~'")
    p.add_argument("--at-root", type=int, metavar="K", help="evaluate q at a primitive K-th root of unity (printed as z)")
    p.set_defaults(func=cmd_hl)

    p = sub.add_parser("theta", parents=[common], help="rigged configuration of a tuple of rows")
    p.add_argument("--tuple", required=True, help='JSON, e.g. "[[1,4],[1,2],[1,2,3,3]]"')
    p.add_argument("--weight")
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("psi", parents=[common], help="Stanton-White correspondence")
    p.add_argument("--tableau", help="ribbon tableau JSON")
    p.add_argument("--tuple", help="tuple JSON (inverse direction)")
    p.add_argument("--core")
    p.add_argument("--shape")
    p.add_argument("--weight")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("classes", parents=[common], help="diagonal classes of tuples of rows")
    p.add_argument("--shape-tuple", required=True)
    p.add_argument("--weight", required=True)
    p.set_defaults(func=cmd_classes)

    p = sub.add_parser("fermionic", parents=[common], help="fermionic formula")
    p.add_argument("--weight", required=True, help="first context partition (partial sums of sizes)")
    p.add_argument("--rows", required=True, help="second context partition (last shape is its conjugate)")
    p.add_argument("--shapes", help="JSON configuration for the restricted formula")
    p.set_defaults(func=cmd_fermionic)

    p = sub.add_parser("verify", parents=[common], help="rerun worked examples and the root-of-unity checks")
    p.add_argument("--suite", choices=("examples", "rectangular", "column", "all"), default="all")
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, BudgetExceeded, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
