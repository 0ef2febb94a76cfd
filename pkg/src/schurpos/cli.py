"""Command-line interface.

Exit status: 0 on success, 1 for usage and parse errors, 2 for domain errors
raised by the library. Exact rationals are printed as ``num/den``; any
floating value is labelled as an approximation.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import conegeom, glchar, kostka, symfunc, tableaux
from .bialternant import bialternant_eval
from .errors import DomainError, ParseError, SchurposError
from .exactmath import RationalMatrix
from .partitions import Partition, parse_partition, partitions_of
from .symexpr import parse_symexpr

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2


def rat(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def approx(x: Fraction) -> str:
    return f"{float(x):.6g}"


def plist(lam: Partition) -> list[int]:
    return list(lam)


def coeff_table(f: symfunc.SymPoly) -> dict[str, str]:
    return {str(lam): rat(c) for lam, c in f.coeffs.items()}


def format_monomial(alpha: Sequence[int]) -> str:
    factors = []
    for i, e in enumerate(alpha, start=1):
        if e == 1:
            factors.append(f"x{i}")
        elif e > 1:
            factors.append(f"x{i}^{e}")
    return "*".join(factors) or "1"


def format_expansion(exp: symfunc.MonomialExpansion) -> str:
    pieces = []
    for alpha in sorted(exp.terms, reverse=True):
        c = exp.terms[alpha]
        mono = format_monomial(alpha)
        mag = abs(c)
        body = mono if mag == 1 else f"{rat(mag)}*{mono}"
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces) if pieces else "0"


class UsageError(SchurposError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _rationals_arg(text: str) -> list[Fraction]:
    s = text.strip()
    if s.startswith("(") and s.endswith(")") or s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    try:
        return [Fraction(tok.strip()) for tok in s.split(",") if tok.strip()]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected comma-separated rationals, got {text!r}") from None


def _ints_arg(text: str) -> tuple[int, ...]:
    s = text.strip().strip("[]()")
    try:
        return tuple(int(tok) for tok in s.split(",") if tok.strip())
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _expr_poly(text: str) -> symfunc.SymPoly:
    return parse_symexpr(text).to_sympoly()


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="schurpos", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="emit one JSON object")
        return p

    p = verb("partitions", "list the partitions of k in canonical order")
    p.add_argument("k", type=int)

    p = verb("ssyt", "list semistandard tableaux of a shape")
    p.add_argument("shape")
    p.add_argument("max_entry", type=int, nargs="?")
    p.add_argument("--content", help="fix the content, e.g. 2,2,1")

    p = verb("kostka", "Kostka number K_{shape,content}")
    p.add_argument("shape")
    p.add_argument("content")

    p = verb("kostka-matrix", "Kostka matrix of degree k as JSON")
    p.add_argument("k", type=int)
    p.add_argument("--inverse", action="store_true", help="also emit the inverse matrix")

    p = verb("schur-expand", "monomial expansion of a Schur polynomial or s-expression")
    p.add_argument("expr")
    p.add_argument("--vars", type=int, help="expand explicitly in this many variables")

    p = verb("to-schur", "rewrite an m-expression in the Schur basis")
    p.add_argument("expr")

    p = verb("positivity", "test Schur positivity of an expression")
    p.add_argument("expr")

    p = verb("probability", "exact probability that a degree-k polynomial is Schur positive")
    p.add_argument("k", type=int)
    p.add_argument("--method", choices=("formula", "slice"), default="formula")

    p = verb("sample", "Monte Carlo estimate of the Schur-positivity probability")
    p.add_argument("k", type=int)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=conegeom.DEFAULT_SEED)
    p.add_argument("--workers", type=int, default=1)

    p = verb("bialternant", "evaluate s_mu by the quotient of alternants")
    p.add_argument("partition")
    p.add_argument("point")

    p = verb("char", "character values")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--sym2", metavar="a,b,c,d", help="symmetric square of [[a,b],[c,d]]")
    mode.add_argument("--schur", nargs=2, metavar=("PARTITION", "EIGENVALUES"))
    return parser


def _cmd_partitions(args):
    parts = partitions_of(args.k)
    if args.json:
        return {"k": args.k, "count": len(parts), "partitions": [plist(p) for p in parts]}
    return "\n".join(str(p) for p in parts)


def _cmd_ssyt(args):
    shape = _partition_arg(args.shape)
    if args.content is not None:
        content = _ints_arg(args.content)
        tabs = tableaux.enumerate_ssyt_content(shape, content)
    elif args.max_entry is not None:
        content = None
        tabs = tableaux.enumerate_ssyt(shape, args.max_entry)
    else:
        raise UsageError("ssyt needs MAX_ENTRY or --content")
    if args.json:
        out = {"shape": plist(shape), "count": len(tabs), "tableaux": [[list(r) for r in t.rows] for t in tabs]}
        if content is None:
            out["max_entry"] = args.max_entry
        else:
            out["content"] = list(content)
        return out
    return "\n\n".join(t.render() for t in tabs)


def _cmd_kostka(args):
    lam = _partition_arg(args.shape)
    mu = _ints_arg(args.content)
    value = kostka.kostka_number(lam, mu)
    if args.json:
        return {"shape": plist(lam), "content": list(mu), "kostka": value}
    return str(value)


def _cmd_kostka_matrix(args):
    km = kostka.kostka_matrix(args.k)
    out = {
        "k": args.k,
        "order": [plist(p) for p in km.order],
        "matrix": km.as_int_rows(),
        "k_lambda": [sum(r) for r in km.as_int_rows()],
    }
    if args.inverse:
        out["inverse"] = kostka.inverse_kostka_int_rows(args.k)
    return out


def _schur_input(text: str) -> symfunc.SymPoly:
    s = text.strip()
    if not any(ch.isalpha() for ch in s):
        return symfunc.schur_sym(_partition_arg(s))
    f = _expr_poly(s)
    if f.basis != symfunc.SCHUR:
        raise UsageError("schur-expand takes a partition or an s[...] expression")
    return f


def _cmd_schur_expand(args):
    f = _schur_input(args.expr)
    g = symfunc.to_monomial_basis(f)
    text = symfunc.format_sympoly(g)
    exp = symfunc.expand_in_variables(g, args.vars) if args.vars is not None else None
    if args.json:
        out = {"input": symfunc.format_sympoly(f), "monomial": text, "coefficients": coeff_table(g)}
        if exp is not None:
            out["vars"] = args.vars
            out["expansion"] = [
                {"exponents": list(a), "coefficient": rat(exp.terms[a])} for a in sorted(exp.terms, reverse=True)
            ]
        return out
    if exp is not None:
        return f"{text}\n{format_expansion(exp)}"
    return text


def _cmd_to_schur(args):
    f = _expr_poly(args.expr)
    g = symfunc.to_schur_basis(f)
    if args.json:
        return {"input": symfunc.format_sympoly(f), "schur": symfunc.format_sympoly(g), "coefficients": coeff_table(g)}
    return symfunc.format_sympoly(g)


def _cmd_positivity(args):
    f = symfunc.to_monomial_basis(_expr_poly(args.expr))
    g = symfunc.to_schur_basis(f)
    positive = symfunc.is_schur_positive(f)
    if args.json:
        return {
            "input": args.expr.strip(),
            "schur_positive": positive,
            "schur": symfunc.format_sympoly(g),
            "coefficients": coeff_table(g),
        }
    verdict = "Schur positive" if positive else "NOT Schur positive"
    return f"{verdict}; s-expansion: {symfunc.format_sympoly(g)}"


def _cmd_probability(args):
    if args.method == "slice":
        value = conegeom.slice_volume_ratio(args.k)
    else:
        value = conegeom.schur_positivity_probability(args.k)
    if args.json:
        return {
            "k": args.k,
            "method": args.method,
            "probability": rat(value),
            "probability_approx": float(value),
            "k_lambda": {str(lam): kostka.k_lambda(lam) for lam in partitions_of(args.k)},
        }
    return f"{rat(value)} (≈ {approx(value)})"


def _cmd_sample(args):
    report = conegeom.sample_positivity(args.k, args.samples, args.seed, workers=args.workers)
    if args.json:
        return report.to_dict()
    return "\n".join(
        [
            f"degree: {report.degree}",
            f"samples: {report.samples}",
            f"seed: {report.seed}",
            f"positive: {report.positive}",
            f"estimate: {rat(report.estimate)} (≈ {approx(report.estimate)})",
            f"standard error ≈ {report.standard_error:.6g}",
            f"exact: {rat(report.exact)} (≈ {approx(report.exact)})",
            f"z-score ≈ {report.z_score():.3f}",
        ]
    )


def _cmd_bialternant(args):
    mu = _partition_arg(args.partition)
    xs = _rationals_arg(args.point)
    value = bialternant_eval(mu, xs)
    if args.json:
        return {"partition": plist(mu), "point": [rat(x) for x in xs], "value": rat(value)}
    return rat(value)


def _cmd_char(args):
    if args.sym2 is not None:
        vals = _rationals_arg(args.sym2)
        if len(vals) != 4:
            raise UsageError("--sym2 takes exactly four entries a,b,c,d")
        a = RationalMatrix([vals[:2], vals[2:]], cols=2)
        value = glchar.char_sym_square(a)
        if args.json:
            return {"mode": "sym2", "matrix": [[rat(x) for x in a.row(i)] for i in range(2)], "value": rat(value)}
        return rat(value)
    lam = _partition_arg(args.schur[0])
    eig = _rationals_arg(args.schur[1])
    value = glchar.char_schur_eval(lam, eig)
    if args.json:
        return {"mode": "schur", "partition": plist(lam), "eigenvalues": [rat(x) for x in eig], "value": rat(value)}
    return rat(value)


COMMANDS = {
    "partitions": _cmd_partitions,
    "ssyt": _cmd_ssyt,
    "kostka": _cmd_kostka,
    "kostka-matrix": _cmd_kostka_matrix,
    "schur-expand": _cmd_schur_expand,
    "to-schur": _cmd_to_schur,
    "positivity": _cmd_positivity,
    "probability": _cmd_probability,
    "sample": _cmd_sample,
    "bialternant": _cmd_bialternant,
    "char": _cmd_char,
}


def run(argv: Sequence[str], stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        result = COMMANDS[args.verb](args)
    except (UsageError, ParseError) as exc:
        print(f"schurpos: error: {exc}", file=stderr)
        return EXIT_USAGE
    except (SchurposError, ValueError, ZeroDivisionError) as exc:
        print(f"schurpos: error: {exc}", file=stderr)
        return EXIT_DOMAIN
    if isinstance(result, dict):
        result = json.dumps(result)
    if result:
        print(result, file=stdout)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> None:
    raise SystemExit(run(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
