"""Why Sylvester determinants are interpolation data.

Clearing denominators in x = u1/v1, y = u2/v2 gives two polynomials in the
parameter, p = u1 - x*v1 and q = u2 - y*v2, whose resultant in t is the
implicit polynomial F.  The resultant is the determinant of the Sylvester
matrix — entries linear in x or y — so evaluating that matrix at any point
(x0, y0) and taking an ordinary rational determinant yields F(x0, y0)
without ever expanding the determinant symbolically.
"""

from fractions import Fraction

from implicurve import (
    OpCounter,
    RatParam,
    UniPoly,
    bipoly_eval,
    build_parametric_sylvester,
    det_bareiss,
    eval_polymat,
    format_bipoly,
    method_kronecker,
)

P = RatParam(
    UniPoly([1, 2, 2]), UniPoly([5, 0, 0, 1]),
    UniPoly([-1, 1, -3, 1]), UniPoly([-3, 0, 1]),
)
S = build_parametric_sylvester(P)
print(f"x(t) = (2t^2+2t+1)/(t^3+5), y(t) = (t^3-3t^2+t-1)/(t^2-3)")
print(f"Sylvester matrix order: {S.order} (degree 3 + degree 3)\n")

print("matrix entries (row by row):")
for row in S.entries:
    print("  [" + ", ".join(format_bipoly(e) if not e.is_zero else "0" for e in row) + "]")

F = method_kronecker(P).F
print(f"\nimplicit equation: {format_bipoly(F)} = 0\n")

print("determinant at a point == implicit polynomial at that point:")
for (x0, y0) in [(0, 0), (2, 5), (Fraction(-7, 3), Fraction(1, 2))]:
    d = det_bareiss(eval_polymat(S, x0, y0), OpCounter())
    v = bipoly_eval(F, x0, y0)
    ratio = "0" if v == 0 else f"{d / v}"
    print(f"  ({x0}, {y0}): det = {d}, F = {v}, det/F = {ratio}")
print("\n(The constant ratio is the canonical rescaling of F; here the")
print("resultant came out with opposite sign, so the ratio is -1.)")
