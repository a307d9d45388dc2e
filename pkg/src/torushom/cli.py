"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.  Normal output
goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import curves, hecke, recursion, soergel, verify
from .algebra import (
    GradedTable,
    RatFunc,
    ratfunc_to_json,
    render_poly,
    render_ratfunc,
    series_truncate,
    table_to_json,
)
from .braid import identity_permutation, longest_permutation, parse_word


def _print_table(table: GradedTable) -> None:
    for (eq, et, ea), c in table.entries:
        mono = f"q^{eq}"
        if et:
            mono += f" t^{et}"
        if ea:
            mono += f" a^{ea}"
        print(f"{mono}: {c}")


def _cmd_hhh(args) -> int:
    m, n = args.m, args.n
    if args.census:
        census = recursion.term_census_a(m, n)
        if args.json:
            print(json.dumps({str(d): c for d, c in census}))
        else:
            for d, c in census:
                print(f"a^{d}: {c}")
        return 0
    if args.reduced:
        poly = recursion.reduced_knot_poly(m, n)
        if args.json:
            print(ratfunc_to_json(RatFunc.from_poly(poly)))
        else:
            print(render_poly(poly))
        return 0
    if args.euler:
        series = recursion.euler_a0(m, n)
    elif args.a0:
        series = recursion.hhh_a0(m, n)
    else:
        series = recursion.hhh_torus(m, n)
    if args.truncate is not None:
        table = series_truncate(series, args.truncate)
        if args.json:
            print(table_to_json(table))
        else:
            _print_table(table)
    elif args.json:
        print(ratfunc_to_json(series))
    else:
        print(render_ratfunc(series))
    return 0


def _cmd_count(args) -> int:
    b = parse_word(args.strands, args.word)
    target = (
        identity_permutation(args.strands)
        if args.target == "e"
        else longest_permutation(args.strands)
    )
    if args.brute is not None:
        count = hecke.brute_force_count(b, target, args.brute, threads=args.threads)
        print(json.dumps({"count": count}) if args.json else count)
        return 0
    poly = hecke.point_count(b, target)
    print(poly.to_json() if args.json else poly.render())
    return 0


def _cmd_soergel2(args) -> int:
    table = soergel.hhh0_two_strand(args.m, args.cutoff)
    if args.json:
        print(
            json.dumps(
                {
                    "cutoff": table.cutoff,
                    "dims": [
                        {"internal": d, "homological": h, "dim": v}
                        for (d, h), v in table.dims
                    ],
                }
            )
        )
    else:
        for (d, h), v in table.dims:
            print(f"Q^{d} T^{h}: {v}")
    return 0


def _cmd_curve(args) -> int:
    if args.which == "hilb":
        table = curves.hilb_poincare_series(args.m, args.n, args.max_k)
        if args.json:
            print(table_to_json(table))
        else:
            by_k: dict[int, list[str]] = {}
            for (eq, et, _), c in table.entries:
                coef = "" if c == 1 else f"{c}*"
                by_k.setdefault(eq, []).append(f"{coef}t^{et}" if et else str(c))
            for k in range(args.max_k + 1):
                print(f"k={k}: {' + '.join(by_k.get(k, ['0']))}")
    elif args.which == "jac":
        cells = curves.jacobian_cells(args.m, args.n)
        if args.json:
            print("[" + ", ".join(c.to_json() for c in cells) + "]")
        else:
            for c in cells:
                print(
                    f"dim {c.dimension}: generators {list(c.generators)} "
                    f"bits {c.module.bits_str()}"
                )
            dims = sorted((c.dimension for c in cells), reverse=True)
            print(f"dimensions: {dims}")
    else:  # node
        table = curves.node_hilb(args.max_k)
        if args.json:
            print(table_to_json(table))
        else:
            _print_table(table)
    return 0


def _cmd_catalan(args) -> int:
    print(curves.rational_catalan(args.m, args.n))
    return 0


def _cmd_ors(args) -> int:
    report = curves.ors_compare(args.m, args.n, args.max_k)
    euler_ok, euler_ratio = curves.euler_compare(args.m, args.n, args.max_k)
    if args.json:
        print(
            json.dumps(
                {
                    "m": report.m,
                    "n": report.n,
                    "kmax": report.kmax,
                    "match": report.success,
                    "ratio": list(report.ratio) if report.ratio else None,
                    "euler_match": euler_ok,
                    "euler_ratio": list(euler_ratio) if euler_ratio else None,
                }
            )
        )
    else:
        print(report.render())
        print(f"euler({args.m},{args.n}) kmax={args.max_k}: "
              + ("match" if euler_ok else "MISMATCH"))
    return 0 if report.success and euler_ok else 1


def _cmd_verify(args) -> int:
    try:
        reports = verify.run_verifications(args.suite, threads=args.threads)
    except KeyError as exc:
        print(f"usage error: {exc.args[0]}", file=sys.stderr)
        return 2
    if args.json:
        print("[" + ", ".join(r.to_json() for r in reports) + "]")
    else:
        for r in reports:
            print(r.render())
    return 0 if all(r.all_passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torushom",
        description="Exact torus-link homology, braid-variety point counts, "
        "and curve-singularity cell data.",
    )
    parser.add_argument(
        "--threads", type=int, default=1, help="worker threads for brute force"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hhh", help="torus link Poincare series")
    p.add_argument("kind", choices=["torus"])
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--a0", action="store_true", help="a = 0 specialization")
    p.add_argument("--euler", action="store_true", help="a = 0, t = 1/q")
    p.add_argument("--reduced", action="store_true", help="reduced knot numerator")
    p.add_argument("--census", action="store_true", help="a-degree term census")
    p.add_argument("--truncate", type=int, metavar="D", help="q-series table")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_hhh)

    p = sub.add_parser("count", help="braid variety point count")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--word", required=True, help="comma-separated signed indices")
    p.add_argument("--target", choices=["e", "w0"], default="e")
    p.add_argument("--brute", type=int, metavar="P", help="brute force over F_P")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("soergel2", help="two-strand homology table")
    p.add_argument("m", type=int)
    p.add_argument("--cutoff", type=int, required=True, help="internal degree bound")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_soergel2)

    p = sub.add_parser("curve", help="curve singularity cell data")
    curve_sub = p.add_subparsers(dest="which", required=True)
    ph = curve_sub.add_parser("hilb", help="Hilbert scheme Poincare series")
    ph.add_argument("m", type=int)
    ph.add_argument("n", type=int)
    ph.add_argument("--max-k", type=int, required=True)
    ph.add_argument("--json", action="store_true")
    pj = curve_sub.add_parser("jac", help="compactified Jacobian cells")
    pj.add_argument("m", type=int)
    pj.add_argument("n", type=int)
    pj.add_argument("--json", action="store_true")
    pn = curve_sub.add_parser("node", help="node xy=0 Hilbert series")
    pn.add_argument("--max-k", type=int, required=True)
    pn.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_curve)

    p = sub.add_parser("catalan", help="rational Catalan number")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_catalan)

    p = sub.add_parser("ors", help="Hilbert scheme vs homology comparison")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_ors)

    p = sub.add_parser("verify", help="run cross-verification suites")
    p.add_argument("suite", nargs="?", default="all")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    return parser


def dispatch(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
