"""Exact linear algebra over Python ints and Fractions.

Dependency-free routines sized for the small dense matrices (rank <= ~40)
this package works with. No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import NotPositiveDefiniteError

IntMatrix = Sequence[Sequence[int]]


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(mat):
    return [list(col) for col in zip(*mat)]


def mat_mul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(mat, vec):
    return [sum(x * y for x, y in zip(row, vec)) for row in mat]


def vec_mat(vec, mat):
    return [sum(vec[i] * mat[i][j] for i in range(len(vec))) for j in range(len(mat[0]))]


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def quadratic_value(mat, vec):
    return dot(vec, mat_vec(mat, vec))


def first_asymmetry(mat) -> tuple[int, int] | None:
    n = len(mat)
    if any(len(row) != n for row in mat):
        return (0, 0) if n == 0 else (0, len(mat[0]) - 1)
    for i in range(n):
        for j in range(i + 1, n):
            if mat[i][j] != mat[j][i]:
                return i, j
    return None


def bareiss_determinant(mat: IntMatrix) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    n = len(mat)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def ldl_decomposition(q) -> tuple[list[list[Fraction]], list[Fraction]]:
    """Q = L D L^T with L unit lower triangular, D positive diagonal.

    Raises NotPositiveDefiniteError at the first non-positive pivot; the pivot
    index equals the index of the first failing leading principal minor.
    """
    n = len(q)
    lower = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    diag = [Fraction(0)] * n
    for j in range(n):
        pivot = Fraction(q[j][j]) - sum(lower[j][k] ** 2 * diag[k] for k in range(j))
        if pivot <= 0:
            raise NotPositiveDefiniteError(j + 1)
        diag[j] = pivot
        for i in range(j + 1, n):
            off = Fraction(q[i][j]) - sum(lower[i][k] * lower[j][k] * diag[k] for k in range(j))
            lower[i][j] = off / pivot
    return lower, diag


def invert_matrix(mat) -> list[list[Fraction]]:
    """Inverse of a nonsingular square matrix, by Gauss-Jordan over Fractions."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot_row is None:
            raise ValueError("matrix is singular")
        a[col], a[pivot_row] = a[pivot_row], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def solve_linear(mat, rhs) -> list[Fraction]:
    """Unique solution of mat * x = rhs for nonsingular mat."""
    inv = invert_matrix(mat)
    return mat_vec(inv, [Fraction(x) for x in rhs])


def integer_matrix_inverse(mat: IntMatrix) -> list[list[int]]:
    """Inverse of a unimodular integer matrix, returned with integer entries."""
    inv = invert_matrix(mat)
    out = []
    for row in inv:
        assert all(x.denominator == 1 for x in row), "matrix is not unimodular"
        out.append([int(x) for x in row])
    return out


def rational_rank(mat) -> int:
    rows = [[Fraction(x) for x in row] for row in mat]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot_row = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot_row is None:
            continue
        rows[rank], rows[pivot_row] = rows[pivot_row], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def smith_normal_form(mat: IntMatrix) -> tuple[list[int], list[list[int]], list[list[int]]]:
    """U * mat * V = diag(d) with U, V unimodular, d[i] >= 0 and d[i] | d[i+1].

    Returns (d, U, V) where d has length min(rows, cols) and zeros, if any,
    sit at the end.
    """
    a = [list(map(int, row)) for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    left = identity(m)
    right = identity(n)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in right:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, factor):
        a[dst] = [x + factor * y for x, y in zip(a[dst], a[src])]
        left[dst] = [x + factor * y for x, y in zip(left[dst], left[src])]

    def add_col(dst, src, factor):
        for row in a:
            row[dst] += factor * row[src]
        for row in right:
            row[dst] += factor * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        left[i] = [-x for x in left[i]]

    t = 0
    while t < min(m, n):
        # locate smallest-magnitude nonzero entry in the trailing block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        if a[t][t] < 0:
            negate_row(t)
        dirty = False
        for i in range(t + 1, m):
            if a[i][t] != 0:
                add_row(i, t, -(a[i][t] // a[t][t]))
                if a[i][t] != 0:
                    dirty = True
        for j in range(t + 1, n):
            if a[t][j] != 0:
                add_col(j, t, -(a[t][j] // a[t][t]))
                if a[t][j] != 0:
                    dirty = True
        if dirty:
            continue
        pivot = a[t][t]
        offender = next(
            ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % pivot),
            None,
        )
        if offender is not None:
            add_row(t, offender[0], 1)
            continue
        t += 1

    diag = [a[i][i] for i in range(min(m, n))]
    return diag, left, right


def integer_row_kernel(mat: IntMatrix) -> list[list[int]]:
    """Basis of {y in Z^m : y * mat = 0}; the result is a saturated lattice basis."""
    m = len(mat)
    if m == 0:
        return []
    diag, left, _right = smith_normal_form(mat)
    rank = sum(1 for d in diag if d != 0)
    return [list(left[i]) for i in range(rank, m)]


def hermite_row_basis(rows: IntMatrix) -> list[list[int]]:
    """Canonical row Hermite form: pivots positive, entries above a pivot
    reduced into [0, pivot). Zero rows are dropped."""
    work = [list(map(int, r)) for r in rows if any(r)]
    if not work:
        return []
    ncols = len(work[0])
    pivot_row = 0
    for col in range(ncols):
        while True:
            nz = [i for i in range(pivot_row, len(work)) if work[i][col] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(work[i][col]), i))
            work[pivot_row], work[i0] = work[i0], work[pivot_row]
            done = True
            for i in range(pivot_row + 1, len(work)):
                if work[i][col] != 0:
                    q = work[i][col] // work[pivot_row][col]
                    work[i] = [x - q * y for x, y in zip(work[i], work[pivot_row])]
                    if work[i][col] != 0:
                        done = False
            if done:
                if work[pivot_row][col] < 0:
                    work[pivot_row] = [-x for x in work[pivot_row]]
                for i in range(pivot_row):
                    q = work[i][col] // work[pivot_row][col]
                    if q:
                        work[i] = [x - q * y for x, y in zip(work[i], work[pivot_row])]
                pivot_row += 1
                break
        if pivot_row == len(work):
            break
    return [r for r in work if any(r)]


def reduce_mod_rows(vec, hnf_rows) -> list[int]:
    """Canonical representative of vec modulo the row lattice of hnf_rows."""
    out = list(map(int, vec))
    for row in hnf_rows:
        col = next(j for j, x in enumerate(row) if x != 0)
        q = out[col] // row[col]
        if q:
            out = [x - q * y for x, y in zip(out, row)]
    return out


def sign_normalize(vec) -> tuple:
    """Flip the sign so the first nonzero entry is positive."""
    for x in vec:
        if x != 0:
            return tuple(vec) if x > 0 else tuple(-y for y in vec)
    return tuple(vec)
