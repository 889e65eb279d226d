"""Definite filling obstructions from correction terms.

A space with two-element first homology that bounds a positive definite
4-manifold has reversed label sum at least 0, and equality forces the pair
(1/4, -1/4). Running the clause on both orientations decides whether any
definite filling can exist. An analogous sign test applies to homology
spheres.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .dinvariant import DInvariantReport, QuarterPair, reverse_pair
from .errors import UnsupportedExpressionError

STANDARD_PAIR = QuarterPair(Fraction(1, 4), Fraction(-1, 4))


class FillingConclusion(enum.Enum):
    OBSTRUCTED = "Obstructed"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Verdict:
    """Filling conclusions for both signs of definite 4-manifold."""

    positive_definite: FillingConclusion
    negative_definite: FillingConclusion
    reason: str


def positive_filling_obstruction(pair: QuarterPair) -> tuple[FillingConclusion, str]:
    """One verdict component: can the space bound positive definite?

    Obstructed iff the label sum is positive, or zero with a pair other than
    (1/4, -1/4).
    """
    total = pair.d_quarter + pair.d_minus_quarter
    if total > 0:
        return (
            FillingConclusion.OBSTRUCTED,
            f"d_{{1/4}} + d_{{-1/4}} = {total} > 0",
        )
    if total == 0 and pair != STANDARD_PAIR:
        return (
            FillingConclusion.OBSTRUCTED,
            f"d_{{1/4}} + d_{{-1/4}} = 0 with values ({pair.d_quarter}, "
            f"{pair.d_minus_quarter}) != (1/4, -1/4)",
        )
    return (
        FillingConclusion.INCONCLUSIVE,
        f"d_{{1/4}} + d_{{-1/4}} = {total} permits a positive filling",
    )


def definite_verdict(pair: QuarterPair) -> Verdict:
    """Run the filling obstruction on both orientations of a two-class space."""
    positive, positive_reason = positive_filling_obstruction(pair)
    negative, negative_reason = positive_filling_obstruction(reverse_pair(pair))
    return Verdict(
        positive_definite=positive,
        negative_definite=negative,
        reason=f"positive: {positive_reason}; negative: {negative_reason}",
    )


def sphere_filling_obstruction(value: Fraction) -> tuple[FillingConclusion, str]:
    """One verdict component for a homology sphere: d > 0 blocks positive fillings."""
    if value > 0:
        return FillingConclusion.OBSTRUCTED, f"d = {value} > 0"
    return FillingConclusion.INCONCLUSIVE, f"d = {value} permits a positive filling"


def sphere_definite_verdict(value: Fraction) -> Verdict:
    """Both-orientation verdict for a homology sphere."""
    positive, positive_reason = sphere_filling_obstruction(Fraction(value))
    negative, negative_reason = sphere_filling_obstruction(-Fraction(value))
    return Verdict(
        positive_definite=positive,
        negative_definite=negative,
        reason=f"positive: {positive_reason}; negative: {negative_reason}",
    )


def report_verdict(report: DInvariantReport) -> Verdict:
    """Verdict for an evaluated expression with one or two spin-c classes."""
    if report.h1 == 1:
        (value,) = report.class_values
        return sphere_definite_verdict(value)
    if report.pair is None:
        raise UnsupportedExpressionError(
            "filling verdict needs one class or a labelled pair of classes"
        )
    return definite_verdict(report.pair)


def surgery_cobordism_obstruction(pair: QuarterPair) -> bool:
    """Whether the labels rule out homology cobordism to 2/q surgery on a knot.

    Such surgeries satisfy d_{1/4} - d_{-1/4} >= 1/2; the same difference
    serves both orientations.
    """
    return pair.d_quarter - pair.d_minus_quarter < Fraction(1, 2)


def surgery_difference(pair: QuarterPair) -> Fraction:
    """The labelled difference consumed by the surgery obstruction."""
    return pair.d_quarter - pair.d_minus_quarter
