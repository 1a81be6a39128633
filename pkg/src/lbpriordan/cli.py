"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 computation error, 3 network error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence, TextIO

from . import families as fam
from . import moments as mom
from . import oeis, riordan
from .parsing import ParseError, parse_rational, parse_ratfunc, parse_terms
from .riordan import Triangle

__all__ = ["main", "run"]

FORMATS = ("plain", "csv", "json", "bfile")


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def fmt_rat(v: Fraction) -> str:
    return str(Fraction(v))


def _bfile(values: Sequence[Fraction]) -> str:
    lines = []
    for n, v in enumerate(values):
        v = Fraction(v)
        if v.denominator != 1:
            raise UsageError(f"b-file needs integers; term {n} is {v}")
        lines.append(f"{n} {v.numerator}")
    return "\n".join(lines) + "\n"


def render_sequence(values: Sequence[Fraction], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"terms": [fmt_rat(v) for v in values]}) + "\n"
    if fmt == "bfile":
        return _bfile(values)
    return ",".join(fmt_rat(v) for v in values) + "\n"


def render_triangle(t: Triangle, fmt: str) -> str:
    return render_matrix([list(r) for r in t], fmt)


def render_matrix(rows: Sequence[Sequence[Fraction]], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"rows": [[fmt_rat(v) for v in r] for r in rows]}) + "\n"
    if fmt == "bfile":
        return _bfile([v for r in rows for v in r])
    if fmt == "csv":
        return "".join(",".join(fmt_rat(v) for v in r) + "\n" for r in rows)
    cells = [[fmt_rat(v) for v in r] for r in rows]
    width = max((len(c) for r in cells for c in r), default=1)
    return "".join(" ".join(c.rjust(width) for c in r) + "\n" for r in cells)


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _terms(text: str) -> list[Fraction]:
    try:
        return parse_terms(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _add_format(p):
    p.add_argument("--format", choices=FORMATS, default="plain")


def _add_family(p, families=("lbp", "assoc", "gen", "gen-assoc")):
    p.add_argument("--family", choices=families, default="lbp")
    p.add_argument("--alpha", type=_rational, default=Fraction(1))
    p.add_argument("--beta", type=_rational, default=Fraction(1))
    p.add_argument("--gamma", type=_rational, default=Fraction(0))
    p.add_argument("--variant", choices=("prop1", "prop2"), default="prop2")


def _params(args):
    if args.family in ("gen", "gen-assoc"):
        return fam.GenFamilyParams(args.alpha, args.beta, args.gamma)
    return fam.FamilyParams(args.alpha, args.beta, fam.Variant(args.variant))


def _family_array(args, order: int) -> riordan.RiordanArray:
    p = _params(args)
    return {
        "lbp": fam.lbp_array,
        "assoc": fam.assoc_array,
        "gen": fam.gen_array,
        "gen-assoc": fam.gen_assoc_array,
    }[args.family](p, order)


def _family_triangle(args, rows: int) -> Triangle:
    p = _params(args)
    if args.family == "lbp":
        return fam.lbp_triangle(p, rows).coeffs
    if args.family == "assoc":
        return fam.assoc_orthogonal(p, rows).coeffs
    if args.family == "gen":
        return fam.gen_triangle(p, rows).coeffs
    return fam.gen_assoc_orthogonal(p, rows).coeffs


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lbpriordan", description="Riordan arrays and Laurent biorthogonal polynomials")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    for verb in ("triangle", "inverse", "rowsums"):
        p = sub.add_parser(verb)
        _add_family(p)
        p.add_argument("--rows", type=_positive, default=6)
        if verb != "inverse":
            p.add_argument("--inverse", action="store_true")
        _add_format(p)

    p = sub.add_parser("moments")
    _add_family(p)
    p.add_argument("-n", type=_positive, default=6)
    _add_format(p)

    p = sub.add_parser("hankel")
    p.add_argument("--terms", type=_terms)
    _add_family(p)
    p.add_argument("-n", type=_positive)
    _add_format(p)

    p = sub.add_parser("cf", help="expand a continued fraction")
    p.add_argument("--kind", choices=("t", "j", "rowsums"), default="t")
    p.add_argument("--alpha", type=_rational, default=Fraction(1))
    p.add_argument("--beta", type=_rational, default=Fraction(1))
    p.add_argument("--c", type=_terms, help="T-fraction linear coefficients")
    p.add_argument("--d", type=_terms, help="T-fraction numerator weights")
    p.add_argument("--b", type=_terms, help="J-fraction diagonal")
    p.add_argument("--lam", type=_terms, help="J-fraction x^2 weights")
    p.add_argument("-n", type=_positive, default=8)
    _add_format(p)

    p = sub.add_parser("jfrac-from-moments")
    p.add_argument("--terms", type=_terms, required=True)
    p.add_argument("--depth", type=_positive)
    _add_format(p)

    p = sub.add_parser("riordan")
    p.add_argument("--g", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--rows", type=_positive, default=6)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--show", choices=("triangle", "a", "z", "production"), default="triangle")
    _add_format(p)

    p = sub.add_parser("derivative")
    _add_family(p, families=("lbp",))
    p.add_argument("--rows", type=_positive, default=6)
    _add_format(p)

    p = sub.add_parser("detrep")
    _add_family(p, families=("lbp",))
    p.add_argument("-n", type=_positive, default=4)
    _add_format(p)

    p = sub.add_parser("oeis-match")
    p.add_argument("--terms", type=_terms, required=True)
    p.add_argument("--live", action="store_true")
    p.add_argument("--timeout", type=float, default=10.0)
    p.add_argument("--cache-dir")
    _add_format(p)
    return parser


def _dispatch(args, out: TextIO, transport=None) -> None:
    verb = args.verb
    fmt = args.format

    if verb in ("triangle", "inverse", "rowsums"):
        inverse = verb == "inverse" or args.inverse
        if inverse:
            t = riordan.inv(_family_array(args, args.rows)).triangle()
        else:
            t = _family_triangle(args, args.rows)
        if verb == "rowsums":
            out.write(render_sequence(mom.row_sums(t), fmt))
        else:
            out.write(render_triangle(t, fmt))

    elif verb == "moments":
        if args.family in ("assoc", "gen-assoc"):
            seq = list(riordan.inv(_family_array(args, args.n)).g_series(args.n))
        else:
            seq = mom.moments(_params(args), args.n)
        out.write(render_sequence(seq, fmt))

    elif verb == "hankel":
        if args.terms is not None:
            terms = args.terms
        else:
            n = args.n or 6
            terms = list(riordan.inv(_family_array(args, 2 * n - 1)).g_series())
        out.write(render_sequence(mom.hankel_transform(terms, args.n), fmt))

    elif verb == "cf":
        n = args.n
        if args.c is not None or args.d is not None:
            if args.c is None or args.d is None:
                raise UsageError("--c and --d go together")
            series = mom.tfraction_series(mom.TFraction(args.c, args.d), n)
        elif args.b is not None:
            series = mom.jfraction_series(mom.JFraction(args.b, args.lam or []), n)
        else:
            p = fam.FamilyParams(args.alpha, args.beta)
            if args.kind == "t":
                series = mom.tfraction_series(mom.lbp_tfraction(p, n), n)
            else:
                y = 1 if args.kind == "rowsums" else 0
                series = mom.jfraction_series(mom.lbp_jfraction(p, n, y), n)
        out.write(render_sequence(list(series), fmt))

    elif verb == "jfrac-from-moments":
        jf = mom.jfraction_from_moments(args.terms, args.depth)
        if fmt == "json":
            out.write(json.dumps({"b": [fmt_rat(v) for v in jf.b],
                                  "lam": [fmt_rat(v) for v in jf.lam]}) + "\n")
        elif fmt == "bfile":
            raise UsageError("b-file output is for single sequences")
        else:
            sep = "," if fmt == "csv" else ": "
            out.write(f"b{sep}{','.join(map(fmt_rat, jf.b))}\n")
            out.write(f"lam{sep}{','.join(map(fmt_rat, jf.lam))}\n")

    elif verb == "riordan":
        R = riordan.make(parse_ratfunc(args.g), parse_ratfunc(args.f), args.rows)
        if args.inverse:
            R = riordan.inv(R)
        if args.show == "triangle":
            out.write(render_triangle(R.triangle(), fmt))
        elif args.show == "a":
            out.write(render_sequence(riordan.a_sequence(R, args.rows), fmt))
        elif args.show == "z":
            out.write(render_sequence(riordan.z_sequence(R, args.rows), fmt))
        else:
            out.write(render_matrix(riordan.production_matrix(R, args.rows).to_lists(), fmt))

    elif verb == "derivative":
        out.write(render_triangle(fam.derivative_triangle(_params(args), args.rows), fmt))

    elif verb == "detrep":
        out.write(render_sequence(fam.det_representation(_params(args), args.n), fmt))

    elif verb == "oeis-match":
        ints = []
        for v in args.terms:
            if v.denominator != 1:
                raise UsageError("OEIS terms must be integers")
            ints.append(v.numerator)
        hits = oeis.match(ints, "live" if args.live else "offline",
                          transport=transport, cache=args.cache_dir, timeout=args.timeout)
        if fmt == "json":
            out.write(json.dumps({"matches": [h.id for h in hits]}) + "\n")
        else:
            out.write("".join(h.id + "\n" for h in hits))


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None,
        err: Optional[TextIO] = None, *, transport=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except UsageError as exc:
        err.write(f"lbpriordan: {exc}\n")
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        _dispatch(args, out, transport=transport)
    except oeis.OEISNetworkError as exc:
        err.write(f"lbpriordan: network error: {exc}\n")
        return 3
    except (mom.ComputationError, ZeroDivisionError) as exc:
        err.write(f"lbpriordan: {exc}\n")
        return 2
    except ValueError as exc:
        err.write(f"lbpriordan: {exc}\n")
        return 1
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
