"""Correction terms of plumbed 3-manifolds.

For a negative definite plumbing tree with at most one bad vertex, the
correction term of each spin-c structure is (max K^2 + s) / 4, maximizing the
square over characteristic covectors in the class and counting vertices with
s. Spaces with two-element first homology get their two values labelled by
residue mod 2, and connected sums with homology spheres shift both labels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .defects import max_char_square
from .errors import (
    LabellingViolationError,
    NotNegativeDefiniteError,
    ResidueViolationError,
    TooManyBadVerticesError,
    UnnormalizedSeifertDataError,
    UnsupportedExpressionError,
)
from .lattice import Covector, IntegralLattice, base_characteristic, discriminant_group
from .linalg import hermite_row_basis, reduce_mod_rows
from .plumbing import (
    ConnectedSum,
    PlumbingTree,
    PoincareAtom,
    SeifertData,
    bad_vertex_indices,
    canonical_plumbing,
    gram,
    h1_order,
    parse_expression,
    reverse_orientation,
)

POINCARE_SPHERE_D = Fraction(2)


@dataclass(frozen=True)
class SpinCClass:
    """A coset of twice the lattice inside the characteristic covectors."""

    representative: Covector
    class_id: tuple[int, ...]


def spinc_classes(lat: IntegralLattice) -> tuple[SpinCClass, ...]:
    """All spin-c structures on the boundary, one characteristic rep each."""
    group = discriminant_group(lat)
    base = base_characteristic(lat)
    basis = hermite_row_basis([list(row) for row in lat.positive_gram])
    classes = []
    seen = set()
    for coeffs in itertools.product(*(range(d) for d in group.orders)):
        shift = [0] * lat.rank
        for c, gen in zip(coeffs, group.generators):
            for i, p in enumerate(gen.pairings):
                shift[i] += c * p
        key = tuple(reduce_mod_rows(shift, basis))
        if key in seen:
            continue
        seen.add(key)
        pairings = tuple(b + 2 * s for b, s in zip(base.pairings, shift))
        classes.append(SpinCClass(Covector(pairings, lat), coeffs))
    assert len(classes) == abs(lat.determinant)
    return tuple(classes)


def d_invariant(
    tree: PlumbingTree,
    cls: SpinCClass,
    *,
    reduce: bool = True,
    threads: int = 1,
    node_budget: int | None = None,
) -> Fraction:
    """Correction term of one spin-c structure on the plumbing boundary."""
    bad = bad_vertex_indices(tree)
    if len(bad) > 1:
        raise TooManyBadVerticesError(
            f"tree has bad vertices {bad}, the formula allows at most one"
        )
    square = max_char_square(
        cls.representative.lattice,
        cls.representative,
        reduce=reduce,
        threads=threads,
        node_budget=node_budget,
    )
    return Fraction(square + tree.rank, 4)


@dataclass(frozen=True)
class QuarterPair:
    """The two correction terms of a space with two-element first homology,
    labelled by their residues 1/4 and -1/4 mod 2."""

    d_quarter: Fraction
    d_minus_quarter: Fraction


def label_quarter(values) -> QuarterPair:
    """Split two correction terms by residue mod 2."""
    quarter = []
    minus = []
    for v in values:
        v = Fraction(v)
        if (v - Fraction(1, 4)) % 2 == 0:
            quarter.append(v)
        elif (v + Fraction(1, 4)) % 2 == 0:
            minus.append(v)
        else:
            raise LabellingViolationError(
                f"value {v} is not congruent to 1/4 or -1/4 mod 2"
            )
    if len(quarter) != 1 or len(minus) != 1:
        raise LabellingViolationError(
            f"residues do not split the pair: {quarter} vs {minus}"
        )
    return QuarterPair(quarter[0], minus[0])


def reverse_pair(pair: QuarterPair) -> QuarterPair:
    """Labelled pair of the orientation reverse."""
    return QuarterPair(-pair.d_minus_quarter, -pair.d_quarter)


def sum_with_homology_spheres(pair: QuarterPair, values) -> QuarterPair:
    """Shift both labels by correction terms of homology sphere summands."""
    total = Fraction(0)
    for v in values:
        v = Fraction(v)
        if v.denominator != 1 or v % 2 != 0:
            raise ResidueViolationError(
                f"homology sphere correction term {v} is not an even integer"
            )
        total += v
    return QuarterPair(pair.d_quarter + total, pair.d_minus_quarter + total)


def _seifert_tree(data: SeifertData) -> tuple[PlumbingTree, bool]:
    """Canonical plumbing of the space or its reverse; flags the flip."""
    try:
        return canonical_plumbing(data), False
    except UnnormalizedSeifertDataError:
        return canonical_plumbing(reverse_orientation(data)), True


def seifert_class_values(
    data: SeifertData,
    *,
    reduce: bool = True,
    threads: int = 1,
    node_budget: int | None = None,
) -> tuple[Fraction, ...]:
    """Correction terms of a Seifert space, one per spin-c structure."""
    tree, flipped = _seifert_tree(data)
    lat = gram(tree)
    if lat.sign >= 0:
        raise NotNegativeDefiniteError("plumbing lattice is not negative definite")
    values = [
        d_invariant(tree, cls, reduce=reduce, threads=threads, node_budget=node_budget)
        for cls in spinc_classes(lat)
    ]
    if flipped:
        values = [-v for v in values]
    return tuple(values)


@dataclass(frozen=True)
class DInvariantReport:
    """Correction terms of a connected sum expression."""

    expression: ConnectedSum
    h1: int
    class_values: tuple[Fraction, ...]
    pair: QuarterPair | None


def evaluate_expression(
    expression: ConnectedSum | str,
    *,
    reduce: bool = True,
    threads: int = 1,
    node_budget: int | None = None,
) -> DInvariantReport:
    """Correction terms of a connected sum of Seifert spaces.

    At most one summand may have nontrivial first homology; homology sphere
    summands shift every class value. Two-class results carry the labelled
    pair.
    """
    if isinstance(expression, str):
        expression = parse_expression(expression)
    options = dict(reduce=reduce, threads=threads, node_budget=node_budget)
    sphere_values: list[Fraction] = []
    special: SeifertData | None = None
    for term in expression.terms:
        atom = term.atom
        if isinstance(atom, PoincareAtom):
            sphere_values.extend([atom.orientation * POINCARE_SPHERE_D] * term.count)
            continue
        if h1_order(atom) == 1:
            (value,) = seifert_class_values(atom, **options)
            if value.denominator != 1 or value % 2 != 0:
                raise ResidueViolationError(
                    f"homology sphere correction term {value} is not an even integer"
                )
            sphere_values.extend([value] * term.count)
            continue
        if special is not None or term.count > 1:
            raise UnsupportedExpressionError(
                "at most one summand may have nontrivial first homology"
            )
        special = atom
    if special is None:
        total = sum(sphere_values, Fraction(0))
        return DInvariantReport(expression, 1, (total,), None)
    values = seifert_class_values(special, **options)
    shift = sum(sphere_values, Fraction(0))
    shifted = tuple(sorted(v + shift for v in values))
    pair = None
    if len(values) == 2:
        pair = sum_with_homology_spheres(label_quarter(values), sphere_values)
    return DInvariantReport(expression, h1_order(special), shifted, pair)
