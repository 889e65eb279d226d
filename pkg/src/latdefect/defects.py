"""Minimal characteristic squares and the defect invariants they define.

For a positive definite lattice of rank n the defect is
(min characteristic square - n) / 4. For |det| = 2 the two characteristic
classes get their own minima and defects d_plus, d_minus, which satisfy
d_plus = 1/4 (mod 2) and d_minus = -1/4 (mod 2).

Reductions to coset enumeration:

  * unrestricted minimum: pairing vectors p run over diag(G) + 2 Z^n and the
    square is p^T G^{-1} p, so minimize with form G^{-1}, target diag(G)/2,
    and scale by 4;
  * per-class minimum (classes of Char mod 2L): in basis coordinates z with
    square z^T G z, the class of a representative chi is z_chi + 2 Z^n, so
    minimize with form G, target z_chi / 2, and scale by 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .enumeration import CosetProblem, EnumerationResult, shortest_in_coset
from .errors import (
    CongruenceViolationError,
    NotBimodularError,
    NotCharacteristicError,
    NotNegativeDefiniteError,
    UnsupportedDeterminantError,
)
from .lattice import (
    CharClassSign,
    Covector,
    IntegralLattice,
    base_characteristic,
    char_class_sign,
    discriminant_group,
    is_characteristic,
    _require_positive,
)
from .linalg import invert_matrix, mat_vec, sign_normalize


@dataclass(frozen=True)
class Defects:
    """Per-class defects; for |det| = 1 both fields carry the single value."""

    d_plus: Fraction
    d_minus: Fraction


def _collapse_pairings(pairings) -> tuple[tuple[int, ...], ...]:
    seen = set()
    for p in pairings:
        seen.add(sign_normalize(p))
    return tuple(sorted(seen))


def _positive_lattice(lat: IntegralLattice):
    return lat.positive_gram


def _class_minimum(
    gram_pos,
    rep_pairings,
    *,
    reduce: bool,
    threads: int,
    node_budget,
    radius,
) -> tuple[Fraction, tuple[tuple[int, ...], ...], int]:
    """Minimum square over rep + 2L in the positive form, with minimizers.

    Works in basis coordinates: z = G^{-1} p, coset z + 2 Z^n, value scaled
    by 4. Returns (min square, minimizing pairing vectors, nodes).
    """
    inv = invert_matrix(gram_pos)
    z = mat_vec(inv, list(rep_pairings))
    target = [x / 2 for x in z]
    inner_radius = None if radius is None else Fraction(radius) / 4
    problem = CosetProblem(gram_pos, target, radius=inner_radius)
    res = shortest_in_coset(
        problem, reduce=reduce, threads=threads, node_budget=node_budget
    )
    pairings = []
    for x in res.minimizers:
        shift = mat_vec(gram_pos, list(x))
        pairings.append(tuple(p + 2 * s for p, s in zip(rep_pairings, shift)))
    return 4 * res.min_norm, _collapse_pairings(pairings), res.nodes_visited


def characteristic_class_reps(lat: IntegralLattice) -> dict[CharClassSign, Covector]:
    """Representatives of the two characteristic classes of a |det| = 2 lattice."""
    if abs(lat.determinant) != 2:
        raise NotBimodularError(f"|det| = {abs(lat.determinant)}, need 2")
    chi = base_characteristic(lat)
    gen = discriminant_group(lat).generators[0]
    shifted = chi.translate([2 * p for p in gen.pairings])
    reps = {}
    for cov in (chi, shifted):
        reps[char_class_sign(cov)] = cov
    if len(reps) != 2:
        raise CongruenceViolationError(
            "characteristic classes do not split into opposite signs"
        )
    return reps


def min_char_norm(
    lat: IntegralLattice,
    sign: CharClassSign | str = "any",
    *,
    radius=None,
    reduce: bool = False,
    threads: int = 1,
    node_budget: int | None = None,
) -> EnumerationResult:
    """Minimal characteristic square, restricted to one class when asked.

    The returned minimizers are the pairing vectors of the minimizing
    covectors, one representative per {xi, -xi} pair, sorted.
    """
    _require_positive(lat, "min_char_norm")
    n = lat.rank
    if sign == "any" or sign is None:
        target = [Fraction(d, 2) for d in lat.diagonal]
        inner_radius = None if radius is None else Fraction(radius) / 4
        problem = CosetProblem(lat.gram_inverse, target, radius=inner_radius)
        res = shortest_in_coset(
            problem, reduce=reduce, threads=threads, node_budget=node_budget
        )
        pairings = [
            tuple(d + 2 * x for d, x in zip(lat.diagonal, offs))
            for offs in res.minimizers
        ]
        return EnumerationResult(
            min_norm=4 * res.min_norm,
            minimizers=_collapse_pairings(pairings),
            nodes_visited=res.nodes_visited,
        )
    wanted = CharClassSign(sign) if not isinstance(sign, CharClassSign) else sign
    rep = characteristic_class_reps(lat)[wanted]
    value, pairings, nodes = _class_minimum(
        lat.gram,
        rep.pairings,
        reduce=reduce,
        threads=threads,
        node_budget=node_budget,
        radius=radius,
    )
    expected = (n + 1) % 8 if wanted is CharClassSign.PLUS else (n - 1) % 8
    if value.denominator != 1 or int(value) % 8 != expected:
        raise CongruenceViolationError(
            f"class minimum {value} is not {expected} mod 8"
        )
    return EnumerationResult(
        min_norm=value, minimizers=pairings, nodes_visited=nodes
    )


def defects(
    lat: IntegralLattice,
    *,
    reduce: bool = False,
    threads: int = 1,
    node_budget: int | None = None,
) -> Defects:
    """Defect invariant(s): (min characteristic square - rank) / 4.

    Unimodular lattices get a single defect reported in both fields;
    |det| = 2 lattices get one defect per characteristic class.
    """
    _require_positive(lat, "defects")
    det = abs(lat.determinant)
    n = lat.rank
    opts = dict(reduce=reduce, threads=threads, node_budget=node_budget)
    if det == 1:
        d = Fraction(min_char_norm(lat, "any", **opts).min_norm - n, 4)
        return Defects(d_plus=d, d_minus=d)
    if det == 2:
        d_plus = Fraction(
            min_char_norm(lat, CharClassSign.PLUS, **opts).min_norm - n, 4
        )
        d_minus = Fraction(
            min_char_norm(lat, CharClassSign.MINUS, **opts).min_norm - n, 4
        )
        if (d_plus - Fraction(1, 4)) % 2 != 0 or (d_minus + Fraction(1, 4)) % 2 != 0:
            raise CongruenceViolationError(
                f"defects ({d_plus}, {d_minus}) miss the +-1/4 residues"
            )
        return Defects(d_plus=d_plus, d_minus=d_minus)
    raise UnsupportedDeterminantError(f"defects need |det| in {{1, 2}}, got {det}")


def max_char_square(
    lat: IntegralLattice,
    class_rep: Covector,
    *,
    reduce: bool = True,
    threads: int = 1,
    node_budget: int | None = None,
) -> Fraction:
    """Largest square over the class rep + 2L of a negative definite lattice.

    Equals minus the minimal square of the corresponding coset in the
    positive definite negation.
    """
    if lat.sign >= 0:
        raise NotNegativeDefiniteError("max_char_square needs a negative definite lattice")
    if class_rep.lattice != lat:
        raise NotCharacteristicError("class representative belongs to a different lattice")
    if not is_characteristic(class_rep):
        raise NotCharacteristicError(
            f"pairings {class_rep.pairings} are not characteristic"
        )
    value, _pairings, _nodes = _class_minimum(
        lat.positive_gram,
        class_rep.pairings,
        reduce=reduce,
        threads=threads,
        node_budget=node_budget,
        radius=None,
    )
    return -value
