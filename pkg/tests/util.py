"""Shared fixtures: reference curves, brute-force oracles, random generators."""

from __future__ import annotations

import math
import random
from fractions import Fraction

from implicurve import BiPoly, MatQ, RatParam, UniPoly, degree_bounds


def frac(a, b=1):
    return Fraction(a, b)


# x = (1+t)/(2+t), y = (3+t)/(4+t): a hyperbola with implicit equation
# 2 - 3y - x + 2xy = 0.
HYPERBOLA = RatParam(
    UniPoly([1, 1]), UniPoly([2, 1]), UniPoly([3, 1]), UniPoly([4, 1])
)
HYPERBOLA_F = BiPoly([[2, -3], [-1, 2]])

# x = (2t^2+2t+1)/(t^3+5), y = (t^3-3t^2+t-1)/(t^2-3): a dense degree-(3,3)
# curve whose implicit polynomial below was cross-checked three independent
# ways (curve-point nullspace, prime-power determinant data, grid data).
CUBIC = RatParam(
    UniPoly([1, 2, 2]),
    UniPoly([5, 0, 0, 1]),
    UniPoly([-1, 1, -3, 1]),
    UniPoly([-3, 0, 1]),
)
CUBIC_F_RAW = BiPoly(
    [
        [-53, 42, -74, 0],
        [172, 707, 121, 37],
        [-652, -1156, -490, -34],
        [626, 396, 432, -2],
    ]
)

# Sylvester determinant data of CUBIC on the grid {0..3} x {0..3}, i-major.
CUBIC_GRID_DATA = [
    -53, -85, -265, -593,
    93, 72, 35, -12,
    2691, 4277, 8723, 15561,
    11497, 21242, 44579, 80014,
]


def cofactor_det(rows) -> Fraction:
    """Brute-force determinant by first-row cofactor expansion."""
    n = len(rows)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j, head in enumerate(rows[0]):
        if head == 0:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        total += (-1) ** j * head * cofactor_det(minor)
    return total


def vandermonde_rows(nodes):
    """V[i][k] = nodes[i]**k."""
    s = len(nodes)
    return [[Fraction(t) ** k for k in range(s)] for t in nodes]


def transpose(rows):
    return [list(col) for col in zip(*rows)]


def kron(a_rows, b_rows):
    out = []
    for arow in a_rows:
        for brow in b_rows:
            out.append([av * bv for av in arow for bv in brow])
    return out


def matvec(rows, vec):
    return [sum((r * v for r, v in zip(row, vec)), Fraction(0)) for row in rows]


def rand_frac(rng: random.Random, lo=-9, hi=9, max_den=5) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def rand_unipoly(rng: random.Random, degree: int, lo=-9, hi=9) -> UniPoly:
    """Random integer-coefficient polynomial of exactly the given degree."""
    coeffs = [rng.randint(lo, hi) for _ in range(degree)]
    coeffs.append(rng.choice([v for v in range(lo, hi + 1) if v]))
    return UniPoly(coeffs)


def rand_ratparam(rng: random.Random, max_deg: int, exact: bool = False) -> RatParam:
    """Random parametrization with both degree bounds in 1..max_deg.

    With ``exact=True`` both bounds equal max_deg (denominators carry the
    top degree).  Redraws until the reduced form still meets the degree
    requirement.
    """
    while True:
        d1 = max_deg if exact else rng.randint(1, max_deg)
        d2 = max_deg if exact else rng.randint(1, max_deg)
        try:
            P = RatParam(
                rand_unipoly(rng, rng.randint(0, d1)),
                rand_unipoly(rng, d1),
                rand_unipoly(rng, rng.randint(0, d2)),
                rand_unipoly(rng, d2),
            )
        except ValueError:
            continue
        b = degree_bounds(P)
        if exact:
            if b.m == max_deg and b.n == max_deg:
                return P
        elif b.m >= 1 and b.n >= 1:
            return P


def fit_loglog_slope(xs, ys) -> float:
    lx = [math.log(v) for v in xs]
    ly = [math.log(v) for v in ys]
    k = len(xs)
    mx = sum(lx) / k
    my = sum(ly) / k
    return sum((a - mx) * (b - my) for a, b in zip(lx, ly)) / sum(
        (a - mx) ** 2 for a in lx
    )
