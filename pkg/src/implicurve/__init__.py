"""Exact-arithmetic implicitization of rational plane curves.

Turn a rational parametrization x(t) = u1/v1, y(t) = u2/v2 into the
implicit equation F(x, y) = 0 of the traced curve, entirely over exact
rationals.  Three interpolation pipelines are provided, distinguished by
their node choice and therefore by the structure of the linear system they
solve: see :mod:`implicurve.implicitize`.
"""

from .polycore import (
    MINUS_INFINITY,
    BiPoly,
    Rat,
    RatParam,
    UniPoly,
    bipoly_canonicalize,
    bipoly_eval,
    poly_eval,
    poly_gcd,
    substitute_check,
)
from .structmat import (
    DegenerateParametrizationError,
    DuplicateNodeError,
    MatQ,
    OpCounter,
    PolyMat,
    SingularMatrixError,
    build_parametric_sylvester,
    det_bareiss,
    eval_polymat,
    kron_solve,
    nullspace,
    solve_general,
    vandermonde_solve_dual,
    vandermonde_solve_primal,
)
from .implicitize import (
    METHOD_DUAL_VANDERMONDE,
    METHOD_KRONECKER,
    METHOD_UNSTRUCTURED,
    METHODS,
    DegenerateInputError,
    DegreeBounds,
    ImplicitResult,
    InternalConsistencyError,
    MethodConfig,
    degree_bounds,
    implicitize,
    method_dual_vandermonde,
    method_kronecker,
    method_unstructured,
    nodes_on_curve,
)
from .cli import (
    ParseError,
    canonical_digest,
    format_bipoly,
    format_ratfun,
    format_unipoly,
    parse_poly_xy,
    parse_rational_function,
)

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "DegenerateInputError",
    "DegenerateParametrizationError",
    "DegreeBounds",
    "DuplicateNodeError",
    "ImplicitResult",
    "InternalConsistencyError",
    "MatQ",
    "METHOD_DUAL_VANDERMONDE",
    "METHOD_KRONECKER",
    "METHOD_UNSTRUCTURED",
    "METHODS",
    "MethodConfig",
    "MINUS_INFINITY",
    "OpCounter",
    "PolyMat",
    "Rat",
    "RatParam",
    "SingularMatrixError",
    "UniPoly",
    "bipoly_canonicalize",
    "bipoly_eval",
    "build_parametric_sylvester",
    "degree_bounds",
    "det_bareiss",
    "eval_polymat",
    "implicitize",
    "kron_solve",
    "method_dual_vandermonde",
    "method_kronecker",
    "method_unstructured",
    "nodes_on_curve",
    "nullspace",
    "ParseError",
    "canonical_digest",
    "format_bipoly",
    "format_ratfun",
    "format_unipoly",
    "parse_poly_xy",
    "parse_rational_function",
    "poly_eval",
    "poly_gcd",
    "solve_general",
    "substitute_check",
    "vandermonde_solve_dual",
    "vandermonde_solve_primal",
]
