"""Exact rational scalars and dense polynomial arithmetic.

Everything in this package computes over arbitrary-precision rationals;
``Rat`` is an alias for :class:`fractions.Fraction`, which already keeps
values in lowest terms with a positive denominator.  On top of that this
module provides dense univariate polynomials (:class:`UniPoly`, the
components of a curve parametrization), bivariate polynomials on a
rectangular coefficient grid (:class:`BiPoly`, candidate implicit
equations), rational parametrizations of plane curves (:class:`RatParam`),
and :func:`substitute_check`, the predicate that decides whether a
bivariate polynomial vanishes identically along a parametrization.

No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd, lcm as _int_lcm
from typing import Iterable, Sequence

Rat = Fraction

#: Degree of the zero polynomial.  Compares below every integer degree.
MINUS_INFINITY = float("-inf")


def _as_rat(value: Rat | int) -> Rat:
    return value if isinstance(value, Fraction) else Fraction(value)


class UniPoly:
    """Dense univariate polynomial with ascending rational coefficients.

    Trailing zero coefficients are stripped on construction, so ``coeffs``
    always ends with the (nonzero) leading coefficient and the zero
    polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rat | int] = ()) -> None:
        cs = [_as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Rat, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> UniPoly:
        return cls(())

    @classmethod
    def one(cls) -> UniPoly:
        return cls((1,))

    @classmethod
    def constant(cls, c: Rat | int) -> UniPoly:
        return cls((c,))

    @property
    def degree(self) -> int | float:
        """Degree of the polynomial; ``MINUS_INFINITY`` for the zero poly."""
        return len(self.coeffs) - 1 if self.coeffs else MINUS_INFINITY

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Rat:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coefficient(self, k: int) -> Rat:
        """Coefficient of t**k, zero beyond the stored degree."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def scale(self, factor: Rat | int) -> UniPoly:
        f = _as_rat(factor)
        return UniPoly(c * f for c in self.coeffs)

    def __neg__(self) -> UniPoly:
        return UniPoly(-c for c in self.coeffs)

    def __add__(self, other: UniPoly) -> UniPoly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return UniPoly(out)

    def __sub__(self, other: UniPoly) -> UniPoly:
        return self + (-other)

    def __mul__(self, other: UniPoly | Rat | int) -> UniPoly:
        if isinstance(other, (Fraction, int)):
            return self.scale(other)
        if self.is_zero or other.is_zero:
            return UniPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> UniPoly:
        if exponent < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = UniPoly.one()
        for _ in range(exponent):
            result = result * self
        return result

    def __divmod__(self, divisor: UniPoly) -> tuple[UniPoly, UniPoly]:
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by the zero polynomial")
        if self.degree < divisor.degree:
            return UniPoly.zero(), self
        d = len(divisor.coeffs) - 1
        lead = divisor.coeffs[-1]
        rem = list(self.coeffs)
        quo = [Fraction(0)] * (len(rem) - d)
        for k in range(len(quo) - 1, -1, -1):
            c = rem[k + d] / lead
            quo[k] = c
            if c:
                for j, oc in enumerate(divisor.coeffs):
                    rem[k + j] -= c * oc
        return UniPoly(quo), UniPoly(rem[:d])

    def __call__(self, t0: Rat | int) -> Rat:
        return poly_eval(self, t0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("UniPoly", self.coeffs))

    def __repr__(self) -> str:
        if self.is_zero:
            return "UniPoly<0>"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*t" if c != 1 else "t")
            else:
                parts.append(f"{c}*t^{k}" if c != 1 else f"t^{k}")
        return "UniPoly<" + " + ".join(parts) + ">"


def poly_eval(p: UniPoly, t0: Rat | int) -> Rat:
    """Evaluate ``p`` at the rational point ``t0`` by Horner's rule."""
    t = _as_rat(t0)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Monic greatest common divisor via the Euclidean algorithm.

    ``poly_gcd(p, 0)`` is the monic multiple of ``p``; the gcd of two zero
    polynomials is undefined and raises ``ValueError``.
    """
    if p.is_zero and q.is_zero:
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = p, q
    while not b.is_zero:
        _, r = divmod(a, b)
        a, b = b, r
    return a.scale(1 / a.leading)


class BiPoly:
    """Bivariate polynomial on an (m+1) x (n+1) coefficient grid.

    ``coeffs[i][j]`` is the coefficient of x**i * y**j; ``m`` and ``n`` are
    x- and y-degree *bounds* (the grid may carry zero padding, so the tight
    degrees ``deg_x``/``deg_y`` can be smaller).  Equality and hashing are
    mathematical: padding does not distinguish two equal polynomials.
    """

    __slots__ = ("m", "n", "coeffs")

    def __init__(self, rows: Sequence[Sequence[Rat | int]]) -> None:
        if not rows or not rows[0]:
            raise ValueError("coefficient grid must be at least 1 x 1")
        width = len(rows[0])
        grid = []
        for row in rows:
            if len(row) != width:
                raise ValueError("coefficient grid must be rectangular")
            grid.append(tuple(_as_rat(c) for c in row))
        self.coeffs: tuple[tuple[Rat, ...], ...] = tuple(grid)
        self.m: int = len(grid) - 1
        self.n: int = width - 1

    @classmethod
    def zeros(cls, m: int = 0, n: int = 0) -> BiPoly:
        return cls([[0] * (n + 1) for _ in range(m + 1)])

    @classmethod
    def constant(cls, c: Rat | int) -> BiPoly:
        return cls([[c]])

    @classmethod
    def from_flat(cls, flat: Sequence[Rat | int], m: int, n: int) -> BiPoly:
        """Reshape an i-major coefficient vector of length (m+1)(n+1)."""
        if len(flat) != (m + 1) * (n + 1):
            raise ValueError("coefficient vector length does not match grid shape")
        return cls([flat[i * (n + 1) : (i + 1) * (n + 1)] for i in range(m + 1)])

    def flat(self) -> tuple[Rat, ...]:
        """Coefficients in i-major, j-minor order (the interpolation basis order)."""
        return tuple(c for row in self.coeffs for c in row)

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for row in self.coeffs for c in row)

    @property
    def deg_x(self) -> int | float:
        for i in range(self.m, -1, -1):
            if any(self.coeffs[i]):
                return i
        return MINUS_INFINITY

    @property
    def deg_y(self) -> int | float:
        for j in range(self.n, -1, -1):
            if any(self.coeffs[i][j] for i in range(self.m + 1)):
                return j
        return MINUS_INFINITY

    def get(self, i: int, j: int) -> Rat:
        """Coefficient of x**i y**j, zero outside the stored grid."""
        if 0 <= i <= self.m and 0 <= j <= self.n:
            return self.coeffs[i][j]
        return Fraction(0)

    def scale(self, factor: Rat | int) -> BiPoly:
        f = _as_rat(factor)
        return BiPoly([[c * f for c in row] for row in self.coeffs])

    def __neg__(self) -> BiPoly:
        return self.scale(-1)

    def _trimmed_key(self) -> tuple[tuple[Rat, ...], ...]:
        dx, dy = self.deg_x, self.deg_y
        if dx is MINUS_INFINITY or dy is MINUS_INFINITY:
            return ()
        return tuple(tuple(row[: int(dy) + 1]) for row in self.coeffs[: int(dx) + 1])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BiPoly) and self._trimmed_key() == other._trimmed_key()

    def __hash__(self) -> int:
        return hash(("BiPoly", self._trimmed_key()))

    def __repr__(self) -> str:
        return f"BiPoly<m={self.m}, n={self.n}, coeffs={self.coeffs!r}>"


def bipoly_eval(F: BiPoly, x0: Rat | int, y0: Rat | int) -> Rat:
    """Evaluate ``F`` at a rational point using running power tables."""
    x, y = _as_rat(x0), _as_rat(y0)
    ypows = [Fraction(1)]
    for _ in range(F.n):
        ypows.append(ypows[-1] * y)
    acc = Fraction(0)
    xpow = Fraction(1)
    for i in range(F.m + 1):
        row = F.coeffs[i]
        rowsum = sum((row[j] * ypows[j] for j in range(F.n + 1)), Fraction(0))
        acc += xpow * rowsum
        xpow *= x
    return acc


def bipoly_canonicalize(F: BiPoly) -> BiPoly:
    """Canonical representative of the projective class of ``F``.

    Trailing zero rows/columns are trimmed, the coefficients are rescaled to
    integers with content 1, and the sign is fixed so the first nonzero
    coefficient in i-major, j-minor order is positive.  The zero polynomial
    has no canonical form and raises ``ValueError``.
    """
    if F.is_zero:
        raise ValueError("the zero polynomial has no canonical form")
    dx, dy = int(F.deg_x), int(F.deg_y)
    trimmed = [list(F.coeffs[i][: dy + 1]) for i in range(dx + 1)]
    den_lcm = 1
    for row in trimmed:
        for c in row:
            den_lcm = _int_lcm(den_lcm, c.denominator)
    ints = [[int(c * den_lcm) for c in row] for row in trimmed]
    content = 0
    for row in ints:
        for v in row:
            content = _int_gcd(content, v)
    first = next(v for row in ints for v in row if v)
    if first < 0:
        content = -content
    return BiPoly([[Fraction(v, content) for v in row] for row in ints])


class RatParam:
    """Rational parametrization (u1/v1, u2/v2) of a plane curve.

    Denominators must be nonzero polynomials.  If a component pair shares a
    nonconstant factor it is cancelled on construction and ``was_reduced``
    records that the input was not in lowest terms.
    """

    __slots__ = ("u1", "v1", "u2", "v2", "was_reduced")

    def __init__(self, u1: UniPoly, v1: UniPoly, u2: UniPoly, v2: UniPoly) -> None:
        if v1.is_zero or v2.is_zero:
            raise ValueError("parametrization denominators must be nonzero")
        reduced = False
        g1 = poly_gcd(u1, v1)
        if g1.degree > 0:
            u1, _ = divmod(u1, g1)
            v1, _ = divmod(v1, g1)
            reduced = True
        g2 = poly_gcd(u2, v2)
        if g2.degree > 0:
            u2, _ = divmod(u2, g2)
            v2, _ = divmod(v2, g2)
            reduced = True
        self.u1, self.v1, self.u2, self.v2 = u1, v1, u2, v2
        self.was_reduced = reduced

    def x_at(self, t0: Rat | int) -> Rat:
        """Value of the x-component at ``t0`` (the denominator must not vanish)."""
        return poly_eval(self.u1, t0) / poly_eval(self.v1, t0)

    def y_at(self, t0: Rat | int) -> Rat:
        return poly_eval(self.u2, t0) / poly_eval(self.v2, t0)

    def __repr__(self) -> str:
        return f"RatParam<x={self.u1!r}/{self.v1!r}, y={self.u2!r}/{self.v2!r}>"


def substitute_check(F: BiPoly, P: RatParam) -> bool:
    """Decide whether F(x(t), y(t)) vanishes identically.

    Uses the denominator-cleared substitution: with grid bounds (m, n) the
    sum of ``F.coeffs[i][j] * u1^i v1^(m-i) * u2^j v2^(n-j)`` must be the
    zero polynomial in t.  A zero candidate ``F`` is rejected with
    ``ValueError`` (it vanishes everywhere and always indicates an upstream
    bug, never a computed implicit equation).
    """
    if F.is_zero:
        raise ValueError("substitute_check requires a nonzero polynomial")
    m, n = F.m, F.n
    u1p = _powers(P.u1, m)
    v1p = _powers(P.v1, m)
    u2p = _powers(P.u2, n)
    v2p = _powers(P.v2, n)
    total = UniPoly.zero()
    for i in range(m + 1):
        for j in range(n + 1):
            c = F.coeffs[i][j]
            if c:
                total = total + (u1p[i] * v1p[m - i] * u2p[j] * v2p[n - j]).scale(c)
    return total.is_zero


def _powers(p: UniPoly, upto: int) -> list[UniPoly]:
    out = [UniPoly.one()]
    for _ in range(upto):
        out.append(out[-1] * p)
    return out
