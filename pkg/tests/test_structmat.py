import random
from fractions import Fraction

import pytest

from implicurve import (
    BiPoly,
    DegenerateParametrizationError,
    DuplicateNodeError,
    MatQ,
    OpCounter,
    RatParam,
    SingularMatrixError,
    UniPoly,
    build_parametric_sylvester,
    det_bareiss,
    eval_polymat,
    kron_solve,
    nullspace,
    solve_general,
    vandermonde_solve_dual,
    vandermonde_solve_primal,
)

from util import (
    CUBIC,
    CUBIC_F_RAW,
    CUBIC_GRID_DATA,
    HYPERBOLA,
    cofactor_det,
    kron,
    matvec,
    rand_frac,
    transpose,
    vandermonde_rows,
)


# --- OpCounter ---------------------------------------------------------------


def test_opcounter_counts_and_merges():
    a = OpCounter()
    a.count(adds=3, muls=2)
    a.observe(Fraction(255, 7))  # 8-bit numerator
    b = OpCounter()
    b.count(divs=5)
    b.observe(Fraction(-3, 1024))  # 11-bit denominator
    m = a.merged(b)
    assert (m.adds, m.muls, m.divs) == (3, 2, 5)
    assert a.max_bits == 8 and b.max_bits == 11 and m.max_bits == 11
    assert m.muldivs == 7
    # merging is commutative
    m2 = b.merged(a)
    assert (m2.adds, m2.muls, m2.divs, m2.max_bits) == (m.adds, m.muls, m.divs, m.max_bits)


# --- Sylvester construction ---------------------------------------------------


def test_sylvester_hyperbola_entries():
    S = build_parametric_sylvester(HYPERBOLA)
    assert S.order == 2
    assert S.entries[0][0] == BiPoly([[1], [-1]])  # 1 - x
    assert S.entries[0][1] == BiPoly([[1], [-2]])  # 1 - 2x
    assert S.entries[1][0] == BiPoly([[1, -1]])  # 1 - y
    assert S.entries[1][1] == BiPoly([[3, -4]])  # 3 - 4y


def test_sylvester_cubic_entries():
    S = build_parametric_sylvester(CUBIC)
    assert S.order == 6
    x = BiPoly([[0], [1]])
    y = BiPoly([[0, 1]])
    const = BiPoly.constant
    # row 0: (-x, 2, 2, 1-5x, 0, 0), shifted right in rows 1-2
    expected_p = [-x, const(2), const(2), BiPoly([[1], [-5]])]
    expected_q = [const(1), BiPoly([[-3, -1]]), const(1), BiPoly([[-1, 3]])]
    zero = BiPoly.zeros()
    for r in range(3):
        for col in range(6):
            want = expected_p[col - r] if r <= col <= r + 3 else zero
            assert S.entries[r][col] == want
            want = expected_q[col - r] if r <= col <= r + 3 else zero
            assert S.entries[3 + r][col] == want


def test_sylvester_mixed_degrees():
    # x = t, y = t^2 gives a 3x3 matrix with one p-row block of height 2
    P = RatParam(UniPoly([0, 1]), UniPoly.one(), UniPoly([0, 0, 1]), UniPoly.one())
    S = build_parametric_sylvester(P)
    assert S.order == 3
    x = BiPoly([[0], [1]])
    y = BiPoly([[0, 1]])
    one = BiPoly.constant(1)
    zero = BiPoly.zeros()
    assert S.entries[0] == (one, -x, zero)
    assert S.entries[1] == (zero, one, -x)
    assert S.entries[2] == (one, zero, -y)


def test_sylvester_rejects_constant_components():
    with pytest.raises(DegenerateParametrizationError):
        build_parametric_sylvester(
            RatParam(UniPoly([1]), UniPoly([1]), UniPoly([0, 1]), UniPoly.one())
        )
    with pytest.raises(DegenerateParametrizationError):
        build_parametric_sylvester(
            RatParam(UniPoly([0, 1]), UniPoly.one(), UniPoly([7]), UniPoly([2]))
        )


def test_eval_polymat_values():
    S = build_parametric_sylvester(HYPERBOLA)
    M = eval_polymat(S, Fraction(1, 2), Fraction(3, 4))
    assert M.entries == MatQ([[Fraction(1, 2), 0], [Fraction(1, 4), 0]]).entries
    M2 = eval_polymat(S, 2, 3)
    assert M2.entries == MatQ([[-1, -3], [-2, -9]]).entries


def test_polymat_det_agrees_with_cofactor_after_evaluation():
    rng = random.Random(11)
    for P in (HYPERBOLA, CUBIC):
        S = build_parametric_sylvester(P)
        for _ in range(5):
            x0, y0 = rand_frac(rng), rand_frac(rng)
            M = eval_polymat(S, x0, y0)
            assert det_bareiss(M, OpCounter()) == cofactor_det(
                [list(r) for r in M.entries]
            )


# --- determinants --------------------------------------------------------------


def test_det_examples():
    c = OpCounter()
    assert det_bareiss(MatQ([[2]]), c) == 2
    assert det_bareiss(MatQ([[1, 2], [3, 4]]), c) == -2
    assert det_bareiss(MatQ.identity(5), c) == 1
    assert det_bareiss(MatQ([[0, 1], [1, 0]]), c) == -1  # needs a row swap
    assert det_bareiss(MatQ([[1, 2], [2, 4]]), c) == 0
    assert det_bareiss(MatQ([[Fraction(1, 2), 0], [7, Fraction(2, 3)]]), c) == Fraction(1, 3)


def test_det_rejects_nonsquare():
    with pytest.raises(ValueError):
        det_bareiss(MatQ([[1, 2, 3], [4, 5, 6]]), OpCounter())


def test_det_matches_cofactor_expansion():
    rng = random.Random(12)
    for trial in range(120):
        n = rng.randint(2, 5)
        if trial % 2:
            rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        else:
            rows = [[rand_frac(rng) for _ in range(n)] for _ in range(n)]
        assert det_bareiss(MatQ(rows), OpCounter()) == cofactor_det(rows)


def test_det_triangular_is_diagonal_product():
    rng = random.Random(13)
    for _ in range(20):
        n = rng.randint(2, 6)
        rows = [
            [rand_frac(rng) if j <= i else Fraction(0) for j in range(n)]
            for i in range(n)
        ]
        want = Fraction(1)
        for i in range(n):
            want *= rows[i][i]
        assert det_bareiss(MatQ(rows), OpCounter()) == want


def test_det_zero_column_and_zero_row():
    assert det_bareiss(MatQ([[0, 1, 2], [0, 3, 4], [0, 5, 6]]), OpCounter()) == 0
    assert det_bareiss(MatQ([[1, 1, 2], [0, 0, 0], [0, 5, 6]]), OpCounter()) == 0


# --- general solver / nullspace -------------------------------------------------


def test_solve_general_moment_system():
    # power sums of the nodes (1, 3, 2, 6) against coefficients (2, -3, -1, 2)
    A = MatQ([[1, 1, 1, 1], [1, 3, 2, 6], [1, 9, 4, 36], [1, 27, 8, 216]])
    c = solve_general(A, [0, 3, 43, 345], OpCounter())
    assert c == [2, -3, -1, 2]


def test_solve_general_identity_and_random_cramer():
    rng = random.Random(14)
    assert solve_general(MatQ.identity(4), [5, 6, 7, 8], OpCounter()) == [5, 6, 7, 8]
    for _ in range(30):
        n = rng.randint(2, 4)
        rows = [[rand_frac(rng) for _ in range(n)] for _ in range(n)]
        d = cofactor_det(rows)
        if d == 0:
            continue
        b = [rand_frac(rng) for _ in range(n)]
        x = solve_general(MatQ(rows), b, OpCounter())
        # Cramer's rule, column by column
        for j in range(n):
            cols = [
                [rows[i][k] if k != j else b[i] for k in range(n)] for i in range(n)
            ]
            assert x[j] == cofactor_det(cols) / d
        assert matvec(rows, x) == b


def test_solve_general_rejects_singular():
    with pytest.raises(SingularMatrixError):
        solve_general(MatQ([[1, 2], [2, 4]]), [1, 1], OpCounter())


def test_nullspace_of_collocation_matrix():
    A = MatQ(
        [
            [1, Fraction(3, 4), Fraction(1, 2), Fraction(3, 8)],
            [1, Fraction(4, 5), Fraction(2, 3), Fraction(8, 15)],
            [1, Fraction(5, 6), Fraction(3, 4), Fraction(5, 8)],
            [1, Fraction(6, 7), Fraction(4, 5), Fraction(24, 35)],
        ]
    )
    basis = nullspace(A)
    assert len(basis) == 1
    v = basis[0]
    # proportional to (2, -3, -1, 2)
    lam = v[0] / 2
    assert lam != 0
    assert v == tuple(lam * w for w in (2, -3, -1, 2))


def test_nullspace_dimensions_and_residual():
    assert nullspace(MatQ.identity(3)) == []
    basis = nullspace(MatQ([[1, 1]]))
    assert basis == [(Fraction(-1), Fraction(1))]
    rng = random.Random(15)
    for _ in range(25):
        rows_n = rng.randint(1, 4)
        cols_n = rng.randint(1, 5)
        rows = [[rand_frac(rng, -3, 3, 2) for _ in range(cols_n)] for _ in range(rows_n)]
        M = MatQ(rows)
        basis = nullspace(M)
        for v in basis:
            assert matvec(rows, list(v)) == [0] * rows_n
        # rank-nullity: pivot count + basis size = column count
        assert len(basis) <= cols_n


def test_nullspace_counter_is_optional_but_counts():
    A = MatQ([[1, 2, 3], [4, 5, 6]])
    c = OpCounter()
    nullspace(A, c)
    assert c.adds > 0 or c.divs > 0


# --- Vandermonde solvers --------------------------------------------------------


def test_primal_examples():
    assert vandermonde_solve_primal([0, 1], [2, -1], OpCounter()) == [2, -3]
    assert vandermonde_solve_primal(
        [0, 1, 2, 3], [-53, -85, -265, -593], OpCounter()
    ) == [-53, 42, -74, 0]
    assert vandermonde_solve_primal([5], [7], OpCounter()) == [7]


def test_dual_example_moments():
    c = vandermonde_solve_dual([1, 3, 2, 6], [0, 3, 43, 345], OpCounter())
    assert c == [2, -3, -1, 2]


def test_vandermonde_residuals_are_zero():
    rng = random.Random(16)
    for _ in range(40):
        s = rng.randint(1, 8)
        nodes = rng.sample(range(-12, 13), s)
        values = [rand_frac(rng) for _ in range(s)]
        a = vandermonde_solve_primal(nodes, values, OpCounter())
        V = vandermonde_rows(nodes)
        assert matvec(V, a) == values
        b = [rand_frac(rng) for _ in range(s)]
        cvec = vandermonde_solve_dual(nodes, b, OpCounter())
        assert matvec(transpose(V), cvec) == b


def test_vandermonde_agree_with_general_solver():
    rng = random.Random(17)
    for _ in range(40):
        s = rng.randint(2, 8)
        pool = sorted({Fraction(n, d) for n in range(-10, 11) for d in (1, 2, 3)})
        nodes = rng.sample(pool, s)
        rhs = [rand_frac(rng) for _ in range(s)]
        V = vandermonde_rows(nodes)
        assert vandermonde_solve_primal(nodes, rhs, OpCounter()) == solve_general(
            MatQ(V), rhs, OpCounter()
        )
        assert vandermonde_solve_dual(nodes, rhs, OpCounter()) == solve_general(
            MatQ(transpose(V)), rhs, OpCounter()
        )


def test_vandermonde_error_cases():
    with pytest.raises(DuplicateNodeError):
        vandermonde_solve_primal([1, 2, 1], [1, 2, 3], OpCounter())
    with pytest.raises(DuplicateNodeError):
        vandermonde_solve_dual([Fraction(1, 2), Fraction(2, 4)], [1, 2], OpCounter())
    with pytest.raises(ValueError):
        vandermonde_solve_primal([1, 2], [1], OpCounter())


def test_vandermonde_quadratic_op_budget():
    rng = random.Random(18)
    for s in (2, 5, 9, 16):
        nodes = rng.sample(range(-20, 21), s)
        rhs = [rand_frac(rng) for _ in range(s)]
        cp = OpCounter()
        vandermonde_solve_primal(nodes, rhs, cp)
        assert cp.muldivs == s * (s - 1) <= 3 * s * s
        cd = OpCounter()
        vandermonde_solve_dual(nodes, rhs, cd)
        assert cd.muldivs == s * (s - 1) <= 3 * s * s


# --- Kronecker-structured solver ------------------------------------------------


def test_kron_solve_unit_grid():
    c = kron_solve([0, 1], [0, 1], [2, -1, 1, 0], OpCounter())
    assert c == [2, -3, -1, 2]


def test_kron_solve_cubic_grid_data():
    c = kron_solve(list(range(4)), list(range(4)), CUBIC_GRID_DATA, OpCounter())
    assert c == list(CUBIC_F_RAW.flat())


def test_kron_solve_matches_explicit_kronecker_matrix():
    rng = random.Random(19)
    for _ in range(25):
        mx = rng.randint(0, 3)
        ny = rng.randint(0, 3)
        xs = rng.sample(range(-8, 9), mx + 1)
        ys = rng.sample(range(-8, 9), ny + 1)
        b = [rand_frac(rng) for _ in range((mx + 1) * (ny + 1))]
        c = kron_solve(xs, ys, b, OpCounter())
        K = kron(vandermonde_rows(xs), vandermonde_rows(ys))
        assert matvec(K, c) == b


def test_kron_solve_cost_is_sum_of_axis_solves():
    counter = OpCounter()
    kron_solve(list(range(4)), list(range(4)), CUBIC_GRID_DATA, counter)
    # (m+1) solves of size n+1 plus (n+1) solves of size m+1
    assert counter.muldivs == 4 * (4 * 3) + 4 * (4 * 3)
    budget = 6 * 4**3
    assert counter.muldivs <= budget


def test_kron_solve_error_cases():
    with pytest.raises(DuplicateNodeError):
        kron_solve([0, 0], [0, 1], [1, 2, 3, 4], OpCounter())
    with pytest.raises(ValueError):
        kron_solve([0, 1], [0, 1], [1, 2, 3], OpCounter())


# --- exactness of Bareiss under stress ------------------------------------------


def test_bareiss_divisions_stay_exact_on_large_random_matrices():
    # every internal division asserts exactness; survival is the property
    rng = random.Random(20)
    for _ in range(10):
        n = rng.randint(6, 8)
        rows = [[rng.randint(-99, 99) for _ in range(n)] for _ in range(n)]
        det_bareiss(MatQ(rows), OpCounter())
