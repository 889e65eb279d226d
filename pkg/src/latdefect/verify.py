"""Randomized property suites over exactly checkable invariants.

Each suite conjugates known lattices by random unimodular matrices or draws
random rational data, then asserts theorems the rest of the package relies
on. Failures are collected and raised together so a run reports every
violated instance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .defects import characteristic_class_reps, defects
from .errors import SuiteFailureError, ToolkitError
from .glue import extend_covector, glue_overlattice, restrict_covector
from .lattice import (
    CharClassSign,
    Covector,
    IntegralLattice,
    a1_lattice,
    base_characteristic,
    char_class_sign,
    diagonal_bimodular_lattice,
    direct_sum,
    discriminant_group,
    e7_lattice,
    e8_lattice,
    identity_lattice,
    is_characteristic,
    is_diagonal,
    is_diagonal_bimodular,
    validate_lattice,
)
from .linalg import mat_mul, mat_vec, transpose
from .plumbing import SeifertData, canonical_plumbing, gram, h1_order, neg_continued_fraction

SUITE_NAMES = ("elkies", "bimodular", "congruence", "glue", "roundtrip")


@dataclass(frozen=True)
class SuiteReport:
    name: str
    trials: int
    checks: int
    seed: int


def random_unimodular(rng: random.Random, n: int, cap: int = 3) -> list[list[int]]:
    """Random determinant +-1 integer matrix with entries bounded by cap."""
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(4 * n):
        kind = rng.randrange(3)
        if kind == 0 and n > 1:
            i, j = rng.sample(range(n), 2)
            s = rng.choice((-1, 1))
            candidate = [row[:] for row in u]
            for row in candidate:
                row[j] += s * row[i]
            if max(abs(x) for row in candidate for x in row) <= cap:
                u = candidate
        elif kind == 1 and n > 1:
            i, j = rng.sample(range(n), 2)
            for row in u:
                row[i], row[j] = row[j], row[i]
        else:
            i = rng.randrange(n)
            for row in u:
                row[i] = -row[i]
    return u


def conjugate_lattice(lat: IntegralLattice, u: list[list[int]]) -> IntegralLattice:
    """The same bilinear form written in a new basis."""
    g = mat_mul(mat_mul(transpose(u), [list(r) for r in lat.gram]), u)
    return validate_lattice([[int(x) for x in row] for row in g])


class _Run:
    def __init__(self, name: str, rng: random.Random, threads: int, node_budget):
        self.name = name
        self.rng = rng
        self.threads = threads
        self.node_budget = node_budget
        self.checks = 0
        self.violations: list[str] = []

    def check(self, condition: bool, message: str):
        self.checks += 1
        if not condition:
            self.violations.append(message)

    def defects(self, lat):
        return defects(
            lat, reduce=True, threads=self.threads, node_budget=self.node_budget
        )


def _unimodular_bases(run: _Run, rank_bound: int) -> IntegralLattice:
    choices = [identity_lattice(run.rng.randint(1, rank_bound))]
    if rank_bound >= 8:
        choices.append(e8_lattice())
    if rank_bound >= 9:
        choices.append(
            direct_sum(identity_lattice(run.rng.randint(1, rank_bound - 8)), e8_lattice())
        )
    return run.rng.choice(choices)


def _bimodular_bases(run: _Run, rank_bound: int) -> IntegralLattice:
    choices = [diagonal_bimodular_lattice(run.rng.randint(1, rank_bound))]
    if rank_bound >= 7:
        choices.append(e7_lattice())
    if rank_bound >= 9:
        choices.append(direct_sum(a1_lattice(), e8_lattice()))
    return run.rng.choice(choices)


def _suite_elkies(run: _Run, rank_bound: int, trials: int):
    for _ in range(trials):
        base = _unimodular_bases(run, rank_bound)
        lat = conjugate_lattice(base, random_unimodular(run.rng, base.rank))
        d = run.defects(lat).d_plus
        run.check(d <= 0, f"unimodular defect {d} > 0 for gram {lat.gram}")
        diagonal = is_diagonal(lat)
        run.check(
            (d == 0) == diagonal,
            f"defect {d} vs diagonalizable {diagonal} for gram {lat.gram}",
        )


def _suite_bimodular(run: _Run, rank_bound: int, trials: int):
    for _ in range(trials):
        base = _bimodular_bases(run, rank_bound)
        lat = conjugate_lattice(base, random_unimodular(run.rng, base.rank))
        pair = run.defects(lat)
        total = pair.d_plus + pair.d_minus
        run.check(total <= 0, f"defect sum {total} > 0 for gram {lat.gram}")
        if total == 0:
            run.check(
                is_diagonal_bimodular(lat),
                f"defect sum 0 on a non-diagonal lattice {lat.gram}",
            )
            run.check(
                (pair.d_plus, pair.d_minus) == (Fraction(1, 4), Fraction(-1, 4)),
                f"defect sum 0 with pair ({pair.d_plus}, {pair.d_minus})",
            )


def _suite_congruence(run: _Run, rank_bound: int, trials: int):
    for _ in range(trials):
        base = _bimodular_bases(run, rank_bound)
        lat = conjugate_lattice(base, random_unimodular(run.rng, base.rank))
        n = lat.rank
        shift = [run.rng.randint(-3, 3) for _ in range(n)]
        pairings = tuple(
            d + 2 * s for d, s in zip(base_characteristic(lat).pairings, shift)
        )
        cov = Covector(pairings, lat)
        norm = cov.positive_norm
        run.check(norm.denominator == 1, f"square {norm} is not an integer")
        try:
            sign = char_class_sign(cov)
        except ToolkitError as err:
            run.check(False, f"class sign failed: {err}")
            continue
        expected = (n + 1) % 8 if sign is CharClassSign.PLUS else (n - 1) % 8
        run.check(
            norm % 8 == expected,
            f"square {norm} has wrong residue for class {sign}",
        )
        gen = discriminant_group(lat).generators[0]
        flipped = cov.translate(tuple(2 * p for p in gen.pairings))
        run.check(
            char_class_sign(flipped) is sign.opposite,
            "translating by twice a dual generator kept the class",
        )
        move = mat_vec([list(r) for r in lat.gram], [run.rng.randint(-2, 2) for _ in range(n)])
        fixed = cov.translate(tuple(2 * int(x) for x in move))
        run.check(
            char_class_sign(fixed) is sign,
            "translating by twice a lattice vector changed the class",
        )


def _suite_glue(run: _Run, rank_bound: int, trials: int):
    for _ in range(trials):
        base_left = _bimodular_bases(run, rank_bound)
        base_right = _bimodular_bases(run, rank_bound)
        left = conjugate_lattice(base_left, random_unimodular(run.rng, base_left.rank))
        right = conjugate_lattice(base_right, random_unimodular(run.rng, base_right.rank))
        try:
            over = glue_overlattice(left, right)
        except ToolkitError as err:
            run.check(False, f"glue failed: {err}")
            continue
        run.check(abs(over.determinant) == 1, "overlattice is not unimodular")
        run.check(over.rank == left.rank + right.rank, "rank mismatch")
        chi = base_characteristic(over)
        left_part = restrict_covector(chi, "left")
        right_part = restrict_covector(chi, "right")
        run.check(
            is_characteristic(left_part) and is_characteristic(right_part),
            "restriction of a characteristic covector is not characteristic",
        )
        run.check(
            chi.positive_norm == left_part.positive_norm + right_part.positive_norm,
            "restricted squares do not add up",
        )
        run.check(
            char_class_sign(left_part) is char_class_sign(right_part).opposite,
            "restriction produced equal class signs",
        )
        left_reps = characteristic_class_reps(left)
        right_reps = characteristic_class_reps(right)
        for ls, lcov in left_reps.items():
            for rs, rcov in right_reps.items():
                extended = extend_covector(over, lcov, rcov)
                run.check(extended is not None, "characteristic pair did not extend")
                if extended is None:
                    continue
                run.check(
                    is_characteristic(extended) == (ls is rs.opposite),
                    f"extension characteristic mismatch for signs {ls}, {rs}",
                )
        half = extend_covector(
            over,
            discriminant_group(left).generators[0],
            Covector((0,) * right.rank, right),
        )
        run.check(half is None, "half-integral covector extended integrally")


def _suite_roundtrip(run: _Run, rank_bound: int, trials: int):
    for _ in range(trials):
        p = run.rng.choice([x for x in range(-50, 51) if x != 0])
        q = run.rng.randint(1, 50)
        r = Fraction(p, q)
        expansion = neg_continued_fraction(r)
        run.check(expansion.evaluate() == r, f"expansion of {r} does not evaluate back")
        if r < -1:
            run.check(
                all(a <= -2 for a in expansion.coefficients),
                f"expansion of {r} has a coefficient above -2",
            )
        legs = []
        for _ in range(run.rng.randint(0, 3)):
            a = run.rng.randint(2, 30)
            b = run.rng.randint(1, a - 1)
            legs.append(Fraction(-a, b))
        # each leg contributes less than 1 to the Euler number, so this
        # central framing keeps it negative and the plumbing definite
        central = run.rng.randint(-3, -1) - len(legs)
        try:
            data = SeifertData(central, tuple(legs))
        except ToolkitError:
            continue
        tree = canonical_plumbing(data)
        lat = gram(tree)
        run.check(
            abs(lat.determinant) == h1_order(data),
            f"plumbing determinant mismatch for {data}",
        )
        run.check(lat.sign == -1, f"plumbing of {data} is not negative definite")


_SUITES = {
    "elkies": _suite_elkies,
    "bimodular": _suite_bimodular,
    "congruence": _suite_congruence,
    "glue": _suite_glue,
    "roundtrip": _suite_roundtrip,
}


def verify_suite(
    name: str,
    *,
    rank_bound: int = 6,
    trials: int = 100,
    seed: int = 0,
    threads: int = 1,
    node_budget: int | None = None,
) -> SuiteReport:
    """Run one named suite; raises SuiteFailureError on any violation."""
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}, expected one of {SUITE_NAMES}")
    run = _Run(name, random.Random(seed), threads, node_budget)
    _SUITES[name](run, rank_bound, trials)
    if run.violations:
        raise SuiteFailureError(name, tuple(run.violations))
    return SuiteReport(name=name, trials=trials, checks=run.checks, seed=seed)
