"""Exact linear algebra, cross-checked against sympy."""

import random
from fractions import Fraction

import pytest
import sympy

from latdefect.errors import NotPositiveDefiniteError
from latdefect.linalg import (
    bareiss_determinant,
    first_asymmetry,
    hermite_row_basis,
    integer_matrix_inverse,
    integer_row_kernel,
    invert_matrix,
    ldl_decomposition,
    mat_mul,
    mat_vec,
    quadratic_value,
    rational_rank,
    reduce_mod_rows,
    sign_normalize,
    smith_normal_form,
    solve_linear,
    transpose,
)


def random_int_matrix(rng, m, n, span=9):
    return [[rng.randint(-span, span) for _ in range(n)] for _ in range(m)]


def test_first_asymmetry():
    assert first_asymmetry([[1, 2], [2, 1]]) is None
    assert first_asymmetry([[1, 2], [3, 1]]) == (0, 1)
    assert first_asymmetry([]) is None


def test_determinant_matches_sympy():
    rng = random.Random(1)
    for _ in range(60):
        n = rng.randint(1, 5)
        a = random_int_matrix(rng, n, n)
        assert bareiss_determinant(a) == int(sympy.Matrix(a).det())


def test_determinant_of_singular_and_empty():
    assert bareiss_determinant([]) == 1
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0
    assert bareiss_determinant([[0, 1], [0, 0]]) == 0


def test_inverse_matches_sympy():
    rng = random.Random(2)
    done = 0
    while done < 30:
        n = rng.randint(1, 4)
        a = random_int_matrix(rng, n, n, span=5)
        if int(sympy.Matrix(a).det()) == 0:
            continue
        inv = invert_matrix(a)
        expected = sympy.Matrix(a).inv()
        for i in range(n):
            for j in range(n):
                assert inv[i][j] == Fraction(int(expected[i, j].p), int(expected[i, j].q))
        done += 1


def test_inverse_rejects_singular():
    with pytest.raises(ValueError):
        invert_matrix([[1, 2], [2, 4]])


def test_solve_linear_roundtrip():
    rng = random.Random(3)
    a = [[3, 1, 0], [1, 4, -2], [0, -2, 5]]
    rhs = [Fraction(1, 3), Fraction(-2), Fraction(7, 2)]
    x = solve_linear(a, rhs)
    assert mat_vec([[Fraction(v) for v in row] for row in a], x) == rhs


def test_integer_matrix_inverse_unimodular():
    u = [[1, 3], [0, -1]]
    v = integer_matrix_inverse(u)
    assert mat_mul(u, v) == [[1, 0], [0, 1]]


def test_ldl_reconstructs_form():
    rng = random.Random(4)
    for _ in range(25):
        n = rng.randint(1, 5)
        a = random_int_matrix(rng, n, n, span=3)
        q = mat_mul(transpose(a), a)
        for i in range(n):
            q[i][i] += 1  # forces positive definiteness
        lower, diag = ldl_decomposition(q)
        d = [[diag[i] if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        back = mat_mul(mat_mul(lower, d), transpose(lower))
        assert back == [[Fraction(x) for x in row] for row in q]
        assert all(x > 0 for x in diag)
        assert all(lower[i][i] == 1 for i in range(n))


def test_ldl_reports_first_bad_pivot():
    with pytest.raises(NotPositiveDefiniteError) as info:
        ldl_decomposition([[1, 2], [2, 1]])
    assert info.value.pivot_index == 2
    with pytest.raises(NotPositiveDefiniteError) as info:
        ldl_decomposition([[0]])
    assert info.value.pivot_index == 1


def test_rational_rank_matches_sympy():
    rng = random.Random(5)
    for _ in range(40):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        a = random_int_matrix(rng, m, n, span=2)
        assert rational_rank(a) == sympy.Matrix(a).rank()


def test_smith_normal_form_properties():
    rng = random.Random(6)
    for _ in range(40):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        a = random_int_matrix(rng, m, n, span=6)
        diag, left, right = smith_normal_form(a)
        assert abs(bareiss_determinant(left)) == 1
        assert abs(bareiss_determinant(right)) == 1
        product = mat_mul(mat_mul(left, a), right)
        for i in range(m):
            for j in range(n):
                assert product[i][j] == (diag[i] if i == j and i < len(diag) else 0)
        assert all(d >= 0 for d in diag)
        nonzero = [d for d in diag if d]
        assert all(nonzero[i + 1] % nonzero[i] == 0 for i in range(len(nonzero) - 1))
        # zeros trail
        assert diag == nonzero + [0] * (len(diag) - len(nonzero))


def test_smith_diagonal_matches_sympy():
    from sympy.matrices.normalforms import smith_normal_form as sympy_snf

    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(1, 4)
        a = random_int_matrix(rng, n, n, span=6)
        diag, _left, _right = smith_normal_form(a)
        expected = sympy_snf(sympy.Matrix(a))
        expected_diag = sorted(abs(int(expected[i, i])) for i in range(n))
        assert sorted(diag) == expected_diag


def test_integer_row_kernel():
    rng = random.Random(8)
    for _ in range(30):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        a = random_int_matrix(rng, m, n, span=3)
        kernel = integer_row_kernel(a)
        for v in kernel:
            assert all(x == 0 for x in mat_vec(transpose(a), v))
        assert len(kernel) == m - rational_rank(a)


def test_hermite_row_basis_canonical():
    rows = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    basis = hermite_row_basis(rows)
    for row in basis:
        assert all(x == 0 for x in reduce_mod_rows(row, basis))
    assert rational_rank(basis) == rational_rank(rows)
    for row in rows:
        assert all(x == 0 for x in reduce_mod_rows(row, basis))
    # pivots positive, entries above each pivot reduced into [0, pivot)
    for k, row in enumerate(basis):
        col = next(j for j, x in enumerate(row) if x)
        assert row[col] > 0
        for above in basis[:k]:
            assert 0 <= above[col] < row[col]


def test_reduce_mod_rows_idempotent():
    basis = hermite_row_basis([[2, 1], [0, 3]])
    rng = random.Random(9)
    for _ in range(25):
        v = [rng.randint(-20, 20), rng.randint(-20, 20)]
        r = reduce_mod_rows(v, basis)
        assert reduce_mod_rows(r, basis) == r
        # difference lies in the row lattice
        diff = [a - b for a, b in zip(v, r)]
        assert all(x == 0 for x in reduce_mod_rows(diff, basis))


def test_quadratic_value_and_sign_normalize():
    assert quadratic_value([[2, -1], [-1, 2]], [1, 1]) == 2
    assert sign_normalize((0, -2, 1)) == (0, 2, -1)
    assert sign_normalize((0, 0)) == (0, 0)
    assert sign_normalize((3, -1)) == (3, -1)
