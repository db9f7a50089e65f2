"""Command-line front end: implicitize, bench, and verify subcommands.

Rational functions are written in a small expression grammar, e.g.
``(2*t^2+2*t+1)/(t^3+5)`` or ``t^2-3``; implicit polynomials for ``verify``
use the same term syntax in x and y.  Exit codes: 0 success, 1 input/parse
error, 2 degenerate input, 3 cross-method disagreement (bench), 4 failed
verification (verify).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import statistics
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .polycore import BiPoly, RatParam, UniPoly, poly_gcd, substitute_check
from .structmat import DegenerateParametrizationError
from .implicitize import (
    METHOD_DUAL_VANDERMONDE,
    METHOD_KRONECKER,
    METHOD_UNSTRUCTURED,
    DegenerateInputError,
    ImplicitResult,
    MethodConfig,
    implicitize,
    method_dual_vandermonde,
    method_kronecker,
    method_unstructured,
)

CLI_METHODS = {
    "unstructured": METHOD_UNSTRUCTURED,
    "dualvand": METHOD_DUAL_VANDERMONDE,
    "kron": METHOD_KRONECKER,
}


class ParseError(ValueError):
    """Expression syntax or content error, with the offending position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (position {position})")
        self.position = position


# --- tokenizer / parsers ---------------------------------------------------

_OPS = set("^*/+-()")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(("int", text[i:j], i))
            i = j
        elif ch.isalpha():
            out.append(("name", ch, i))
            i += 1
        elif ch in _OPS:
            out.append((ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    out.append(("end", "", len(text)))
    return out


class _TokenStream:
    def __init__(self, tokens: list[tuple[str, str, int]]) -> None:
        self.tokens = tokens
        self.pos = 0

    def peek(self, ahead: int = 0) -> str:
        k = min(self.pos + ahead, len(self.tokens) - 1)
        return self.tokens[k][0]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        if tok[0] != "end":
            self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> tuple[str, str, int]:
        tok = self.take()
        if tok[0] != kind:
            raise ParseError(f"expected {what}", tok[2])
        return tok

    def here(self) -> int:
        return self.tokens[self.pos][2]


def _parse_varfactor(ts: _TokenStream, variables: frozenset[str]) -> tuple[str, int]:
    tok = ts.take()
    if tok[0] != "name":
        raise ParseError("expected a variable", tok[2])
    if tok[1] not in variables:
        raise ParseError(f"unknown variable {tok[1]!r}", tok[2])
    exp = 1
    if ts.peek() == "^":
        ts.take()
        etok = ts.expect("int", "an integer exponent")
        exp = int(etok[1])
    return tok[1], exp


def _parse_term(
    ts: _TokenStream, variables: frozenset[str]
) -> tuple[Fraction, dict[str, int]]:
    exps: dict[str, int] = {}
    kind = ts.peek()
    if kind == "int":
        tok = ts.take()
        coef = Fraction(int(tok[1]))
        # a rational coefficient binds tighter than the top-level "/" of a
        # rational function: INT "/" INT is always a coefficient
        if ts.peek() == "/" and ts.peek(1) == "int":
            ts.take()
            dtok = ts.take()
            if int(dtok[1]) == 0:
                raise ParseError("zero denominator in coefficient", dtok[2])
            coef = Fraction(coef, int(dtok[1]))
        while ts.peek() == "*":
            ts.take()
            var, exp = _parse_varfactor(ts, variables)
            exps[var] = exps.get(var, 0) + exp
        return coef, exps
    if kind == "name":
        var, exp = _parse_varfactor(ts, variables)
        exps[var] = exp
        while ts.peek() == "*":
            ts.take()
            var, exp = _parse_varfactor(ts, variables)
            exps[var] = exps.get(var, 0) + exp
        return Fraction(1), exps
    raise ParseError("expected a term", ts.here())


def _parse_sum(
    ts: _TokenStream, variables: frozenset[str]
) -> list[tuple[Fraction, dict[str, int]]]:
    terms = []
    sign = 1
    if ts.peek() in ("+", "-"):
        if ts.take()[0] == "-":
            sign = -1
    while True:
        coef, exps = _parse_term(ts, variables)
        terms.append((sign * coef, exps))
        nxt = ts.peek()
        if nxt == "+":
            ts.take()
            sign = 1
        elif nxt == "-":
            ts.take()
            sign = -1
        else:
            return terms


def _terms_to_unipoly(terms: list[tuple[Fraction, dict[str, int]]]) -> UniPoly:
    coeffs: list[Fraction] = []
    for coef, exps in terms:
        e = exps.get("t", 0)
        while len(coeffs) <= e:
            coeffs.append(Fraction(0))
        coeffs[e] += coef
    return UniPoly(coeffs)


def _parse_side(ts: _TokenStream) -> UniPoly:
    if ts.peek() == "(":
        ts.take()
        p = _terms_to_unipoly(_parse_sum(ts, frozenset("t")))
        ts.expect(")", "a closing parenthesis")
        return p
    return _terms_to_unipoly(_parse_sum(ts, frozenset("t")))


def _parse_ratfun_raw(text: str) -> tuple[UniPoly, UniPoly]:
    ts = _TokenStream(_tokenize(text))
    num = _parse_side(ts)
    den = UniPoly.one()
    if ts.peek() == "/":
        slash = ts.take()
        den = _parse_side(ts)
        if den.is_zero:
            raise ParseError("denominator polynomial is zero", slash[2])
    ts.expect("end", "end of input")
    return num, den


def parse_rational_function(text: str) -> tuple[UniPoly, UniPoly]:
    """Parse ``num/den`` (or a bare polynomial) in t, reduced to coprime form.

    Each side is a polynomial, optionally parenthesized; coefficients may be
    rationals like ``3/4``.  Raises :class:`ParseError` on syntax errors and
    on a zero denominator polynomial.
    """
    num, den = _parse_ratfun_raw(text)
    g = poly_gcd(num, den) if not num.is_zero else den.scale(1 / den.leading)
    if g.degree > 0:
        num, _ = divmod(num, g)
        den, _ = divmod(den, g)
    return num, den


def parse_poly_xy(text: str) -> BiPoly:
    """Parse a bivariate polynomial in x and y into a coefficient grid."""
    ts = _TokenStream(_tokenize(text))
    terms = _parse_sum(ts, frozenset("xy"))
    ts.expect("end", "end of input")
    m = max((e.get("x", 0) for _, e in terms), default=0)
    n = max((e.get("y", 0) for _, e in terms), default=0)
    grid = [[Fraction(0)] * (n + 1) for _ in range(m + 1)]
    for coef, exps in terms:
        grid[exps.get("x", 0)][exps.get("y", 0)] += coef
    return BiPoly(grid)


# --- rendering -------------------------------------------------------------


def format_unipoly(p: UniPoly, var: str = "t") -> str:
    if p.is_zero:
        return "0"
    pieces = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        mon = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        mag = abs(c)
        if not mon:
            body = str(mag)
        elif mag == 1:
            body = mon
        else:
            body = f"{mag}*{mon}"
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces)


def format_ratfun(num: UniPoly, den: UniPoly) -> str:
    if den == UniPoly.one():
        return format_unipoly(num)
    return f"({format_unipoly(num)})/({format_unipoly(den)})"


def _monomial_xy(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


def format_bipoly(F: BiPoly) -> str:
    """Render in i-major, j-minor term order (the interpolation basis order)."""
    pieces = []
    for i in range(F.m + 1):
        for j in range(F.n + 1):
            c = F.coeffs[i][j]
            if c == 0:
                continue
            mon = _monomial_xy(i, j)
            mag = abs(c)
            if not mon:
                body = str(mag)
            elif mag == 1:
                body = mon
            else:
                body = f"{mag}*{mon}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
    return "".join(pieces) if pieces else "0"


def canonical_digest(F: BiPoly) -> str:
    payload = f"{F.m}|{F.n}|" + ",".join(str(c) for c in F.flat())
    return hashlib.sha256(payload.encode()).hexdigest()


def result_to_doc(result: ImplicitResult, method: str) -> dict:
    F = result.F
    return {
        "m": F.m,
        "n": F.n,
        "basis": "x^i*y^j (i-major)",
        "coeffs": [[str(c) for c in row] for row in F.coeffs],
        "verified": result.verified,
        "degree_tight": result.degree_tight,
        "method": method,
    }


# --- subcommands -----------------------------------------------------------


@dataclass
class BenchReport:
    """Per-method cost and agreement summary for one parametrization."""

    input_x: str
    input_y: str
    repeat: int
    records: list[dict] = field(default_factory=list)
    agreed: bool = False

    def to_doc(self) -> dict:
        return {
            "input": {"x": self.input_x, "y": self.input_y},
            "repeat": self.repeat,
            "methods": self.records,
            "agreed": self.agreed,
        }


def _parse_param(x_text: str, y_text: str) -> RatParam:
    # parse without reducing so RatParam can flag non-coprime input
    u1, v1 = _parse_ratfun_raw(x_text)
    u2, v2 = _parse_ratfun_raw(y_text)
    return RatParam(u1, v1, u2, v2)


def cmd_implicitize(args: argparse.Namespace) -> int:
    try:
        P = _parse_param(args.x, args.y)
        primes = args.primes.split(",")
        if len(primes) != 2:
            raise ValueError("--primes expects two comma-separated primes")
        cfg = MethodConfig(
            method=CLI_METHODS[args.method], p1=int(primes[0]), p2=int(primes[1])
        )
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if P.was_reduced:
        print("note: components were reduced to lowest terms", file=sys.stderr)
    try:
        result = implicitize(P, cfg)
    except (DegenerateParametrizationError, DegenerateInputError) as exc:
        print(f"error: degenerate input: {exc}", file=sys.stderr)
        return 2
    if args.json:
        payload = json.dumps(result_to_doc(result, cfg.method), indent=2)
    else:
        payload = format_bipoly(result.F)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    return 0


_RUNNERS = {
    METHOD_UNSTRUCTURED: lambda P: method_unstructured(P),
    METHOD_DUAL_VANDERMONDE: lambda P: method_dual_vandermonde(P),
    METHOD_KRONECKER: lambda P: method_kronecker(P),
}


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        P = _parse_param(args.x, args.y)
        if args.methods == "all":
            names = list(CLI_METHODS)
        else:
            names = [s.strip() for s in args.methods.split(",") if s.strip()]
            unknown = [s for s in names if s not in CLI_METHODS]
            if unknown:
                raise ValueError(f"unknown methods: {', '.join(unknown)}")
        if args.repeat < 1:
            raise ValueError("--repeat must be at least 1")
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report = BenchReport(input_x=args.x, input_y=args.y, repeat=args.repeat)
    try:
        for name in names:
            runner = _RUNNERS[CLI_METHODS[name]]
            samples = []
            result = None
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                result = runner(P)
                samples.append((time.perf_counter() - t0) * 1000.0)
            assert result is not None
            report.records.append(
                {
                    "method": CLI_METHODS[name],
                    "wall_ms": statistics.median(samples),
                    "data_ops": {
                        "adds": result.data_counter.adds,
                        "muls": result.data_counter.muls,
                        "divs": result.data_counter.divs,
                    },
                    "solve_ops": {
                        "adds": result.solve_counter.adds,
                        "muls": result.solve_counter.muls,
                        "divs": result.solve_counter.divs,
                    },
                    "max_bits": result.counter.max_bits,
                    "det_evals": result.det_evals,
                    "verified": result.verified,
                    "degree_tight": result.degree_tight,
                    "hash": canonical_digest(result.F),
                }
            )
    except (DegenerateParametrizationError, DegenerateInputError) as exc:
        print(f"error: degenerate input: {exc}", file=sys.stderr)
        return 2
    report.agreed = len({r["hash"] for r in report.records}) == 1
    all_ok = report.agreed and all(r["verified"] for r in report.records)
    if args.json:
        print(json.dumps(report.to_doc(), indent=2))
    else:
        _print_bench_table(report)
    return 0 if all_ok else 3


def _print_bench_table(report: BenchReport) -> None:
    print(
        f"{'method':<17}{'wall_ms':>9}  {'data a/m/d':>20}  "
        f"{'solve a/m/d':>20}  {'bits':>5} {'dets':>5} {'ok':>3}  hash"
    )
    for r in report.records:
        d, s = r["data_ops"], r["solve_ops"]
        data_ops = f"{d['adds']}/{d['muls']}/{d['divs']}"
        solve_ops = f"{s['adds']}/{s['muls']}/{s['divs']}"
        ok = "y" if r["verified"] else "N"
        print(
            f"{r['method']:<17}{r['wall_ms']:>9.2f}  {data_ops:>20}  "
            f"{solve_ops:>20}  {r['max_bits']:>5} {r['det_evals']:>5} "
            f"{ok:>3}  {r['hash'][:12]}"
        )
    print("agreed:", "yes" if report.agreed else "NO")


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        P = _parse_param(args.x, args.y)
        F = _load_poly(args.poly)
        if F.is_zero:
            raise ValueError("the zero polynomial cannot be verified")
    except (ParseError, ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if substitute_check(F, P):
        print("PASS: polynomial vanishes along the parametrization")
        return 0
    print("FAIL: polynomial does not vanish along the parametrization")
    return 4


def _load_poly(source: str) -> BiPoly:
    text = source
    if os.path.isfile(source):
        with open(source) as fh:
            text = fh.read()
    text = text.strip()
    if text.startswith("{"):
        doc = json.loads(text)
        return BiPoly([[Fraction(c) for c in row] for row in doc["coeffs"]])
    return parse_poly_xy(text)


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="implicurve",
        description="Exact implicitization of rationally parametrized plane curves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_imp = sub.add_parser("implicitize", help="compute the implicit polynomial")
    p_imp.add_argument("--x", required=True, metavar="RATFUN", help="x(t), e.g. '(1+t)/(2+t)'")
    p_imp.add_argument("--y", required=True, metavar="RATFUN", help="y(t), e.g. '(3+t)/(4+t)'")
    p_imp.add_argument("--method", choices=sorted(CLI_METHODS), default="kron")
    p_imp.add_argument("--primes", default="2,3", metavar="P1,P2",
                       help="node primes for dualvand (default 2,3)")
    p_imp.add_argument("--json", action="store_true", help="emit a JSON document")
    p_imp.add_argument("--out", metavar="PATH", help="write output to a file")
    p_imp.set_defaults(func=cmd_implicitize)

    p_bench = sub.add_parser("bench", help="run methods side by side and compare")
    p_bench.add_argument("--x", required=True, metavar="RATFUN")
    p_bench.add_argument("--y", required=True, metavar="RATFUN")
    p_bench.add_argument("--methods", default="all",
                         help="'all' or comma list of: " + ",".join(sorted(CLI_METHODS)))
    p_bench.add_argument("--repeat", type=int, default=1, metavar="K",
                         help="samples per method; wall time is the median")
    p_bench.add_argument("--json", action="store_true")
    p_bench.set_defaults(func=cmd_bench)

    p_ver = sub.add_parser("verify", help="check a polynomial against a parametrization")
    p_ver.add_argument("--x", required=True, metavar="RATFUN")
    p_ver.add_argument("--y", required=True, metavar="RATFUN")
    p_ver.add_argument("--poly", required=True,
                       help="polynomial in x,y — inline expression, JSON, or a file path")
    p_ver.set_defaults(func=cmd_verify)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
