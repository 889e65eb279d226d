"""Shared test utilities.

box_minimum is an independent oracle for the coset minimization problem: it
derives coordinate bounds from the diagonal of the inverse form (a
Cauchy-Schwarz argument), takes the inverse from sympy, and walks the whole
box. Nothing here touches the package's own linear algebra.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import sympy


def _round_half_up(x: Fraction) -> int:
    return math.floor(x + Fraction(1, 2))


def quadratic_value(form, vec):
    n = len(vec)
    return sum(Fraction(form[i][j]) * vec[i] * vec[j] for i in range(n) for j in range(n))


def inverse_diagonal(form):
    mat = sympy.Matrix(
        [[sympy.Rational(Fraction(x)) for x in row] for row in form]
    )
    inv = mat.inv()
    return [Fraction(int(inv[i, i].p), int(inv[i, i].q)) for i in range(len(form))]


def _coordinate_range(t: Fraction, bound: Fraction):
    """Integers x with (t + x)^2 <= bound; empty when none exist."""
    x0 = _round_half_up(-t)
    if (t + x0) ** 2 > bound:
        return range(0)
    lo = x0
    while (t + lo - 1) ** 2 <= bound:
        lo -= 1
    hi = x0
    while (t + hi + 1) ** 2 <= bound:
        hi += 1
    return range(lo, hi + 1)


def box_minimum(form, target, radius=None):
    """Exhaustive minimum of (target + x)^T form (target + x) over x in Z^n.

    Returns (min_value, sorted list of minimizing x). With a radius, points
    above it are rejected and (None, []) signals an empty search.
    """
    n = len(form)
    t = [Fraction(v) for v in target]
    if n == 0:
        return Fraction(0), [()]
    rounded = [_round_half_up(-ti) for ti in t]
    at_rounded = quadratic_value(form, [ti + xi for ti, xi in zip(t, rounded)])
    cap = at_rounded if radius is None else min(at_rounded, Fraction(radius))
    inv_diag = inverse_diagonal(form)
    ranges = [_coordinate_range(t[i], cap * inv_diag[i]) for i in range(n)]
    best = None
    argmin: list[tuple[int, ...]] = []
    for x in itertools.product(*ranges):
        value = quadratic_value(form, [ti + xi for ti, xi in zip(t, x)])
        if value > cap:
            continue
        if best is None or value < best:
            best, argmin = value, [x]
        elif value == best:
            argmin.append(x)
    if best is None:
        return None, []
    return best, sorted(argmin)


def box_points_within(form, target, radius):
    """All x with value <= radius, with values; independent of box_minimum."""
    n = len(form)
    t = [Fraction(v) for v in target]
    bound = Fraction(radius)
    inv_diag = inverse_diagonal(form)
    ranges = [_coordinate_range(t[i], bound * inv_diag[i]) for i in range(n)]
    out = []
    for x in itertools.product(*ranges):
        value = quadratic_value(form, [ti + xi for ti, xi in zip(t, x)])
        if value <= bound:
            out.append((x, value))
    return sorted(out)


def collapse_sign_pairs(vectors):
    """One representative per {x, -x} pair, first nonzero entry positive."""
    vs = {tuple(v) for v in vectors}
    out = set()
    for v in vs:
        neg = tuple(-c for c in v)
        if neg in vs:
            lead = next((c for c in v if c != 0), 0)
            out.add(v if lead >= 0 else neg)
        else:
            out.add(v)
    return sorted(out)


def is_positive_definite(rows) -> bool:
    mat = sympy.Matrix([[int(x) for x in row] for row in rows])
    return all(mat[:k, :k].det() > 0 for k in range(1, len(rows) + 1))


def random_spd_gram(rng, max_rank=4, max_entry=6):
    """Seeded random symmetric positive definite integer matrix."""
    while True:
        n = rng.randint(1, max_rank)
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = rng.randint(1, max_entry)
            for j in range(i + 1, n):
                rows[i][j] = rows[j][i] = rng.randint(-2, 2)
        if is_positive_definite(rows):
            return rows


def random_target(rng, n, max_num=8, max_den=4):
    return [
        Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
        for _ in range(n)
    ]
