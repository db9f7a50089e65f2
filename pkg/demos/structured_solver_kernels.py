"""The structured solvers, head to head with general elimination.

Vandermonde systems (primal and transposed) fall to the Björck-Pereyra
sweeps in O(s^2) exact operations; Kronecker products of two Vandermonde
matrices split into independent small solves.  General Gaussian
elimination gets the same answers — at cubic cost.
"""

import random
from fractions import Fraction

from implicurve import (
    MatQ,
    OpCounter,
    kron_solve,
    solve_general,
    vandermonde_solve_dual,
    vandermonde_solve_primal,
)

rng = random.Random(7)

print("— primal Vandermonde: recover a polynomial from its values —")
nodes = [0, 1, 2, 3]
values = [-53, -85, -265, -593]
c = OpCounter()
coeffs = vandermonde_solve_primal(nodes, values, c)
print(f"values {values} at t = {nodes}")
print(f"coefficients (ascending): {coeffs}")
print(f"cost: {c.muls} muls, {c.divs} divs, {c.adds} adds\n")

print("— transposed Vandermonde: recover coefficients from moments —")
nodes = [1, 3, 2, 6]
moments = [0, 3, 43, 345]
c = OpCounter()
sol = vandermonde_solve_dual(nodes, moments, c)
print(f"power sums {moments} over nodes {nodes}")
print(f"solution: {sol}")
print(f"cost: {c.muls} muls, {c.divs} divs, {c.adds} adds\n")

print("— same dual system through general elimination —")
s = len(nodes)
VT = MatQ([[Fraction(t) ** k for t in nodes] for k in range(s)])
cg = OpCounter()
sol_g = solve_general(VT, moments, cg)
print(f"solution: {sol_g}  (identical: {sol_g == sol})")
print(f"cost: {cg.muls} muls, {cg.divs} divs, {cg.adds} adds")
print("structured vs general mul+div:", c.muldivs, "vs", cg.muldivs, "\n")

print("— Kronecker-product system, never formed explicitly —")
xs, ys = [0, 1, 2], [0, 1]
b = [Fraction(rng.randint(-20, 20)) for _ in range(6)]
ck = OpCounter()
sol_k = kron_solve(xs, ys, b, ck)
print(f"grid {len(xs)}x{len(ys)}, right-hand side {b}")
print(f"solution: {sol_k}")
print(f"cost: {ck.muls} muls, {ck.divs} divs (three solves of size 2,")
print("two of size 3 — quadratic in each axis, never cubic in the grid)")
