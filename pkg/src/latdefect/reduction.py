"""Exact-rational LLL reduction operating directly on Gram matrices.

Used only as optional preprocessing for coset enumeration: the output is a
unimodular change of basis, so enumeration results never depend on reduction
quality, only node counts do.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NotPositiveDefiniteError
from .linalg import identity

DELTA = Fraction(3, 4)


def _round_half_up(x: Fraction) -> int:
    num, den = (2 * x + 1).numerator, (2 * x + 1).denominator
    return num // (2 * den)


def lll_reduce_gram(gram, delta: Fraction = DELTA):
    """Return (reduced, u) with reduced = u^T gram u and u unimodular.

    Gram-matrix formulation with incrementally maintained Gram-Schmidt data;
    all arithmetic exact. Raises NotPositiveDefiniteError when a zero
    Gram-Schmidt norm shows the form is degenerate.
    """
    n = len(gram)
    q = [[Fraction(x) for x in row] for row in gram]
    u = identity(n)
    if n <= 1:
        if n == 1 and q[0][0] <= 0:
            raise NotPositiveDefiniteError(1)
        return q, u

    mu = [[Fraction(0)] * n for _ in range(n)]
    gs = [Fraction(0)] * n
    gs[0] = q[0][0]
    if gs[0] <= 0:
        raise NotPositiveDefiniteError(1)

    def size_reduce(k: int, l: int) -> None:
        if 2 * abs(mu[k][l]) <= 1:
            return
        m = _round_half_up(mu[k][l])
        for row in u:
            row[k] -= m * row[l]
        # symmetric Gram update for b_k <- b_k - m b_l
        qkk = q[k][k] - 2 * m * q[k][l] + m * m * q[l][l]
        for j in range(n):
            q[k][j] -= m * q[l][j]
        for i in range(n):
            q[i][k] -= m * q[i][l]
        q[k][k] = qkk
        mu[k][l] -= m
        for i in range(l):
            mu[k][i] -= m * mu[l][i]

    def swap_step(k: int, kmax: int) -> None:
        for row in u:
            row[k], row[k - 1] = row[k - 1], row[k]
        q[k], q[k - 1] = q[k - 1], q[k]
        for row in q:
            row[k], row[k - 1] = row[k - 1], row[k]
        for i in range(k - 1):
            mu[k][i], mu[k - 1][i] = mu[k - 1][i], mu[k][i]
        bar = mu[k][k - 1]
        big = gs[k] + bar * bar * gs[k - 1]
        mu[k][k - 1] = bar * gs[k - 1] / big
        gs[k] = gs[k - 1] * gs[k] / big
        gs[k - 1] = big
        for i in range(k + 1, kmax + 1):
            t = mu[i][k]
            mu[i][k] = mu[i][k - 1] - bar * t
            mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k]

    k = 1
    kmax = 0
    while k < n:
        if k > kmax:
            kmax = k
            scratch = [Fraction(0)] * (k + 1)
            for j in range(k + 1):
                val = q[k][j]
                for i in range(j):
                    val -= mu[j][i] * scratch[i]
                scratch[j] = val
                if j < k:
                    mu[k][j] = val / gs[j]
                else:
                    if val <= 0:
                        raise NotPositiveDefiniteError(k + 1)
                    gs[k] = val
        size_reduce(k, k - 1)
        if gs[k] < (delta - mu[k][k - 1] ** 2) * gs[k - 1]:
            swap_step(k, kmax)
            k = max(1, k - 1)
        else:
            for l in range(k - 2, -1, -1):
                size_reduce(k, l)
            k += 1
    return q, u
