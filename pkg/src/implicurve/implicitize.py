"""Implicitization pipelines: from a rational parametrization to F(x, y) = 0.

Given x(t) = u1/v1 and y(t) = u2/v2, the implicit polynomial F lives in the
bivariate space of x-degree at most m = max(deg u2, deg v2) and y-degree at
most n = max(deg u1, deg v1) — note the cross-over: the *y*-component
degrees bound the *x*-degree of F and vice versa.  All three pipelines
recover F by interpolation in that N = (m+1)(n+1)-dimensional space; they
differ only in where they put the interpolation nodes, and the node choice
dictates the structure (and cost) of the linear algebra:

``method_unstructured``
    Nodes are points on the curve itself, swept from t = 0, 1, 2, ...
    F is a nullspace vector of a dense N x N homogeneous system — no
    structure, cubic-cost elimination.

``method_dual_vandermonde``
    Nodes are geometric points (p1^k, p2^k) for two distinct primes.  The
    right-hand side holds Sylvester determinants there and the matrix is a
    transposed Vandermonde in the composite nodes p1^i p2^j, solved by
    quadratic-cost Björck-Pereyra elimination.

``method_kronecker``
    Nodes are the integer grid {0..m} x {0..n}, again with determinant
    data.  The matrix is the Kronecker product of two small Vandermonde
    matrices and splits into (m+1) + (n+1) independent primal solves.

Every run verifies its result by exact substitution and reports operation
counts split into a data stage (building the system) and a solve stage.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .polycore import (
    BiPoly,
    Rat,
    RatParam,
    bipoly_canonicalize,
    bipoly_eval,
    poly_eval,
    substitute_check,
)
from .structmat import (
    MatQ,
    OpCounter,
    PolyMat,
    build_parametric_sylvester,
    det_bareiss,
    eval_polymat,
    kron_solve,
    nullspace,
    vandermonde_solve_dual,
)

METHOD_UNSTRUCTURED = "unstructured"
METHOD_DUAL_VANDERMONDE = "dual-vandermonde"
METHOD_KRONECKER = "kronecker"
METHODS = (METHOD_UNSTRUCTURED, METHOD_DUAL_VANDERMONDE, METHOD_KRONECKER)


class DegenerateInputError(ValueError):
    """Raised when the interpolation problem stays underdetermined: the
    parametrization traces a curve whose equation is not unique in the
    ambient space even after extra nodes (e.g. a multiply-traced line)."""


class InternalConsistencyError(RuntimeError):
    """Raised when a self-check that can only fail on an implementation bug
    fails: interpolation data not reproduced, or a computed F that does not
    vanish along the input parametrization."""


@dataclass(frozen=True)
class DegreeBounds:
    """Interpolation space: deg_x <= m, deg_y <= n, dimension N = (m+1)(n+1)."""

    m: int
    n: int
    N: int


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass
class MethodConfig:
    """Pipeline selection plus per-method tuning knobs.

    ``p1``/``p2`` are the node primes of the dual-Vandermonde method;
    ``max_extra_nodes`` caps how many rows the unstructured method may add
    beyond N to cut the nullspace down to one dimension (None means 2N).
    """

    method: str = METHOD_KRONECKER
    p1: int = 2
    p2: int = 3
    max_extra_nodes: int | None = None

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}; expected one of {METHODS}")
        if not (_is_prime(self.p1) and _is_prime(self.p2)):
            raise ValueError("node primes p1 and p2 must both be prime")
        if self.p1 == self.p2:
            raise ValueError("node primes p1 and p2 must be distinct")
        if self.max_extra_nodes is not None and self.max_extra_nodes < 0:
            raise ValueError("max_extra_nodes must be nonnegative")


@dataclass
class ImplicitResult:
    """Canonical implicit polynomial plus provenance of the computation.

    ``data_counter`` covers building the linear system (for the determinant
    methods that is ``det_evals`` Sylvester determinants); ``solve_counter``
    covers the linear solve.  ``counter`` merges the two.  ``verified`` is
    the exact substitution check of F along the parametrization and
    ``degree_tight`` records whether F attains both degree bounds.
    """

    F: BiPoly
    bounds: DegreeBounds
    data_counter: OpCounter
    solve_counter: OpCounter
    verified: bool
    degree_tight: bool
    det_evals: int = 0

    @property
    def counter(self) -> OpCounter:
        return self.data_counter.merged(self.solve_counter)


def degree_bounds(P: RatParam) -> DegreeBounds:
    """Degree bounds of the implicit polynomial of ``P``.

    The x-degree bound comes from the y-component and the y-degree bound
    from the x-component.
    """
    n = int(max(len(P.u1.coeffs), len(P.v1.coeffs)) - 1)
    m = int(max(len(P.u2.coeffs), len(P.v2.coeffs)) - 1)
    return DegreeBounds(m=m, n=n, N=(m + 1) * (n + 1))


def curve_points(P: RatParam) -> Iterator[tuple[Rat, Rat]]:
    """Distinct points P(t) for t = 0, 1, 2, ..., skipping parameter values
    where a denominator vanishes and points already produced."""
    seen: set[tuple[Rat, Rat]] = set()
    t = 0
    while True:
        t0 = Fraction(t)
        if poly_eval(P.v1, t0) != 0 and poly_eval(P.v2, t0) != 0:
            pt = (P.x_at(t0), P.y_at(t0))
            if pt not in seen:
                seen.add(pt)
                yield pt
        t += 1


def nodes_on_curve(P: RatParam, count: int) -> list[tuple[Rat, Rat]]:
    """First ``count`` distinct points of the t = 0, 1, 2, ... sweep."""
    if count < 1:
        raise ValueError("node count must be positive")
    gen = curve_points(P)
    return [next(gen) for _ in range(count)]


def interpolation_matrix(
    points: Sequence[tuple[Rat, Rat]],
    m: int,
    n: int,
    counter: OpCounter | None = None,
) -> MatQ:
    """Collocation matrix of the monomial basis x^i y^j (i-major) at ``points``."""
    c = counter if counter is not None else OpCounter()
    rows = []
    for (x0, y0) in points:
        xp = [Fraction(1)]
        for _ in range(m):
            xp.append(xp[-1] * x0)
        yp = [Fraction(1)]
        for _ in range(n):
            yp.append(yp[-1] * y0)
        c.count(muls=m + n)
        row = []
        for i in range(m + 1):
            for j in range(n + 1):
                row.append(xp[i] * yp[j])
        c.count(muls=(m + 1) * (n + 1))
        rows.append(row)
    return MatQ(rows)


def method_unstructured(P: RatParam, cfg: MethodConfig | None = None) -> ImplicitResult:
    """Implicitize by interpolating zero values at points on the curve.

    The homogeneous system A c = 0 over the first N curve points normally
    has a one-dimensional nullspace spanned by the implicit polynomial.  If
    several independent polynomials vanish at the chosen points, more
    points are appended (up to the configured cap) before giving up with
    ``DegenerateInputError``.
    """
    if cfg is None:
        cfg = MethodConfig(method=METHOD_UNSTRUCTURED)
    bounds = degree_bounds(P)
    cap = cfg.max_extra_nodes if cfg.max_extra_nodes is not None else 2 * bounds.N
    data_c = OpCounter()
    solve_c = OpCounter()
    gen = curve_points(P)
    points = [next(gen) for _ in range(bounds.N)]
    A = interpolation_matrix(points, bounds.m, bounds.n, data_c)
    basis = nullspace(A, solve_c)
    extra = 0
    while len(basis) > 1 and extra < cap:
        points.append(next(gen))
        extra += 1
        A = interpolation_matrix(points, bounds.m, bounds.n, data_c)
        basis = nullspace(A, solve_c)
    for row in A.entries:
        data_c.observe_many(row)
    if not basis:
        raise InternalConsistencyError(
            "interpolation system has full rank; no implicit polynomial found"
        )
    if len(basis) > 1:
        raise DegenerateInputError(
            f"nullspace still {len(basis)}-dimensional after {extra} extra nodes"
        )
    F_raw = BiPoly.from_flat(basis[0], bounds.m, bounds.n)
    return _finish(P, bounds, F_raw, data_c, solve_c, det_evals=0)


def method_dual_vandermonde(P: RatParam, cfg: MethodConfig | None = None) -> ImplicitResult:
    """Implicitize from Sylvester determinants at prime-power nodes.

    At the k-th node (p1^k, p2^k) the determinant of the evaluated
    Sylvester matrix equals F there, and the collocation matrix row is
    (alpha_0^k, ..., alpha_{N-1}^k) with composite nodes
    alpha_(i,j) = p1^i p2^j — a transposed Vandermonde system, solved in
    O(N^2) by ``vandermonde_solve_dual``.
    """
    if cfg is None:
        cfg = MethodConfig(method=METHOD_DUAL_VANDERMONDE)
    bounds = degree_bounds(P)
    S = build_parametric_sylvester(P)
    alphas = [
        Fraction(cfg.p1**i * cfg.p2**j)
        for i in range(bounds.m + 1)
        for j in range(bounds.n + 1)
    ]
    assert len(set(alphas)) == len(alphas), "composite prime-power nodes collide"
    data_c = OpCounter()
    solve_c = OpCounter()
    data: list[Rat] = []
    points: list[tuple[Rat, Rat]] = []
    for k in range(bounds.N):
        pt = (Fraction(cfg.p1**k), Fraction(cfg.p2**k))
        points.append(pt)
        data.append(det_bareiss(eval_polymat(S, pt[0], pt[1]), data_c))
    data_c.observe_many(data)
    for alpha in alphas:
        power = Fraction(1)
        for _ in range(bounds.N):
            data_c.observe(power)
            power *= alpha
    c = vandermonde_solve_dual(alphas, data, solve_c)
    F_raw = BiPoly.from_flat(c, bounds.m, bounds.n)
    _check_interpolation_data(F_raw, points, data)
    return _finish(P, bounds, F_raw, data_c, solve_c, det_evals=bounds.N)


def method_kronecker(P: RatParam) -> ImplicitResult:
    """Implicitize from Sylvester determinants on the integer grid.

    Nodes (i, j) for i = 0..m, j = 0..n make the collocation matrix the
    Kronecker product V_x (x) V_y of two small Vandermonde matrices, so the
    solve decomposes into (m+1) + (n+1) Björck-Pereyra eliminations and the
    interpolation data stays as small as the curve itself allows.
    """
    bounds = degree_bounds(P)
    S = build_parametric_sylvester(P)
    x_nodes = [Fraction(i) for i in range(bounds.m + 1)]
    y_nodes = [Fraction(j) for j in range(bounds.n + 1)]
    data_c = OpCounter()
    solve_c = OpCounter()
    data: list[Rat] = []
    points: list[tuple[Rat, Rat]] = []
    for xi in x_nodes:
        for yj in y_nodes:
            points.append((xi, yj))
            data.append(det_bareiss(eval_polymat(S, xi, yj), data_c))
    data_c.observe_many(data)
    for nodes in (x_nodes, y_nodes):
        for t in nodes:
            power = Fraction(1)
            for _ in range(len(nodes)):
                data_c.observe(power)
                power *= t
    c = kron_solve(x_nodes, y_nodes, data, solve_c)
    F_raw = BiPoly.from_flat(c, bounds.m, bounds.n)
    _check_interpolation_data(F_raw, points, data)
    return _finish(P, bounds, F_raw, data_c, solve_c, det_evals=bounds.N)


def implicitize(P: RatParam, cfg: MethodConfig | None = None) -> ImplicitResult:
    """Run the configured pipeline and insist on a verified result.

    Method errors propagate unchanged; a result whose substitution check
    fails raises ``InternalConsistencyError`` (it cannot happen for valid
    rational parametrizations and would mean a bug, not bad input).
    """
    if cfg is None:
        cfg = MethodConfig()
    if cfg.method == METHOD_UNSTRUCTURED:
        result = method_unstructured(P, cfg)
    elif cfg.method == METHOD_DUAL_VANDERMONDE:
        result = method_dual_vandermonde(P, cfg)
    else:
        result = method_kronecker(P)
    if not result.verified:
        raise InternalConsistencyError(
            "computed polynomial does not vanish along the parametrization"
        )
    return result


def _check_interpolation_data(
    F_raw: BiPoly, points: Sequence[tuple[Rat, Rat]], data: Sequence[Rat]
) -> None:
    """Re-evaluate the raw interpolant at every node against its datum.

    For the determinant methods the solved polynomial *is* the resultant,
    so it must reproduce each determinant exactly (before canonical
    rescaling, which may change the overall scale).
    """
    for pt, datum in zip(points, data):
        if bipoly_eval(F_raw, pt[0], pt[1]) != datum:
            raise InternalConsistencyError(
                f"interpolant fails to reproduce its datum at node {pt}"
            )


def _finish(
    P: RatParam,
    bounds: DegreeBounds,
    F_raw: BiPoly,
    data_c: OpCounter,
    solve_c: OpCounter,
    det_evals: int,
) -> ImplicitResult:
    if F_raw.is_zero:
        raise InternalConsistencyError("interpolation produced the zero polynomial")
    F = bipoly_canonicalize(F_raw)
    verified = substitute_check(F, P)
    degree_tight = F.m == bounds.m and F.n == bounds.n
    return ImplicitResult(
        F=F,
        bounds=bounds,
        data_counter=data_c,
        solve_counter=solve_c,
        verified=verified,
        degree_tight=degree_tight,
        det_evals=det_evals,
    )
