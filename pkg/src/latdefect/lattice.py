"""Definite integral lattices and their characteristic covectors.

A lattice is stored by its integer Gram matrix exactly as supplied. Negative
definite input is accepted and tagged; search routines always run on the
positive definite negation, while determinants, covector norms, and dual Gram
matrices refer to the matrix as given.

A covector (element of the dual lattice) is stored by its integer pairing
vector p with p[i] = <xi, e_i> against the chosen basis. It is characteristic
exactly when p is congruent to the Gram diagonal mod 2. For |det| = 2 the
characteristic covectors fall into two classes told apart by the square mod 8
(n + 1 for the plus class, n - 1 for minus, with n the rank, squares taken on
the positive definite form).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property

from .enumeration import CosetProblem, enumerate_in_coset
from .errors import (
    CongruenceViolationError,
    NotBimodularError,
    NotCharacteristicError,
    NotDefiniteError,
    NotIndependentError,
    NotPositiveDefiniteError,
    NotRootsError,
    NotSymmetricError,
)
from .linalg import (
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
    transpose,
)


class CharClassSign(Enum):
    PLUS = "plus"
    MINUS = "minus"

    @property
    def opposite(self) -> "CharClassSign":
        return CharClassSign.MINUS if self is CharClassSign.PLUS else CharClassSign.PLUS

    def __str__(self) -> str:
        return "+" if self is CharClassSign.PLUS else "-"


@dataclass(frozen=True)
class IntegralLattice:
    """Definite lattice; sign is +1 for positive definite, -1 for negative."""

    gram: tuple[tuple[int, ...], ...]
    sign: int
    determinant: int

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def positive_gram(self) -> tuple[tuple[int, ...], ...]:
        if self.sign > 0:
            return self.gram
        return tuple(tuple(-x for x in row) for row in self.gram)

    @cached_property
    def gram_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(row) for row in invert_matrix(self.gram))

    @property
    def positive_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        if self.sign > 0:
            return self.gram_inverse
        return tuple(tuple(-x for x in row) for row in self.gram_inverse)

    @cached_property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.gram[i][i] for i in range(self.rank))


@dataclass(frozen=True)
class Covector:
    """Dual lattice element, stored by integer pairings against the basis."""

    pairings: tuple[int, ...]
    lattice: IntegralLattice

    def __post_init__(self):
        if len(self.pairings) != self.lattice.rank:
            raise ValueError("pairing vector length does not match lattice rank")
        object.__setattr__(self, "pairings", tuple(int(x) for x in self.pairings))

    @property
    def norm(self) -> Fraction:
        """Square <xi, xi> with respect to the Gram matrix as given."""
        q = self.lattice.gram_inverse
        return Fraction(quadratic_value(q, self.pairings))

    @property
    def positive_norm(self) -> Fraction:
        return self.norm if self.lattice.sign > 0 else -self.norm

    def pairing_with(self, coords) -> int:
        return sum(p * int(c) for p, c in zip(self.pairings, coords))

    def translate(self, delta) -> "Covector":
        return Covector(tuple(p + int(d) for p, d in zip(self.pairings, delta)), self.lattice)


@dataclass(frozen=True)
class DiscriminantGroup:
    """Dual quotient L'/L as invariant factors with covector generators."""

    orders: tuple[int, ...]
    generators: tuple[Covector, ...]


def validate_lattice(gram) -> IntegralLattice:
    """Check symmetry and definiteness, returning the tagged lattice.

    The first failing leading principal minor is reported when neither the
    matrix nor its negation is positive definite.
    """
    rows = tuple(tuple(int(x) for x in row) for row in gram)
    n = len(rows)
    if n == 0:
        raise NotDefiniteError(0, 0)
    if any(len(row) != n for row in rows):
        raise NotSymmetricError(0, len(rows[0]) - 1, None, None)
    bad = first_asymmetry(rows)
    if bad is not None:
        i, j = bad
        raise NotSymmetricError(i, j, rows[i][j], rows[j][i])
    if rows[0][0] > 0:
        candidate, sign = rows, 1
    elif rows[0][0] < 0:
        candidate, sign = tuple(tuple(-x for x in row) for row in rows), -1
    else:
        raise NotDefiniteError(1, 0)
    try:
        ldl_decomposition(candidate)
    except NotPositiveDefiniteError as exc:
        k = exc.pivot_index
        minor = bareiss_determinant([row[:k] for row in candidate[:k]])
        raise NotDefiniteError(k, minor if sign > 0 else minor) from None
    det = bareiss_determinant(rows)
    return IntegralLattice(gram=rows, sign=sign, determinant=det)


def dual_gram(lat: IntegralLattice) -> tuple[tuple[Fraction, ...], ...]:
    """Gram matrix of the dual basis: the exact inverse of the Gram given."""
    return lat.gram_inverse


def base_characteristic(lat: IntegralLattice) -> Covector:
    """The covector pairing each basis vector to its own square."""
    return Covector(lat.diagonal, lat)


def is_characteristic(cov: Covector) -> bool:
    diag = cov.lattice.diagonal
    return all((p - d) % 2 == 0 for p, d in zip(cov.pairings, diag))


def char_class_sign(cov: Covector) -> CharClassSign:
    """Which of the two mod-8 classes a characteristic covector sits in.

    Squares are taken on the positive definite form so the classification is
    available for negative definite lattices as well. Requires |det| = 2.
    """
    lat = cov.lattice
    if abs(lat.determinant) != 2:
        raise NotBimodularError(f"|det| = {abs(lat.determinant)}, need 2")
    if not is_characteristic(cov):
        raise NotCharacteristicError(f"pairings {cov.pairings} are not characteristic")
    square = cov.positive_norm
    if square.denominator != 1:
        raise CongruenceViolationError(
            f"characteristic square {square} is not an integer"
        )
    residue = int(square) % 8
    n = lat.rank
    if residue == (n + 1) % 8:
        return CharClassSign.PLUS
    if residue == (n - 1) % 8:
        return CharClassSign.MINUS
    raise CongruenceViolationError(
        f"characteristic square {square} is {residue} mod 8, expected "
        f"{(n + 1) % 8} or {(n - 1) % 8}"
    )


def discriminant_group(lat: IntegralLattice) -> DiscriminantGroup:
    """Invariant factors and canonical covector generators of L'/L.

    Generators are pairing vectors reduced to the canonical representative
    modulo the pairing image of L, so equal lattices yield equal generators.
    """
    g = lat.positive_gram
    diag, left, _right = smith_normal_form(g)
    left_inv = integer_matrix_inverse(left)
    hnf = hermite_row_basis(g)
    orders = []
    gens = []
    for i, d in enumerate(diag):
        if d > 1:
            orders.append(d)
            column = [left_inv[r][i] for r in range(lat.rank)]
            gens.append(Covector(tuple(reduce_mod_rows(column, hnf)), lat))
    total = 1
    for d in orders:
        total *= d
    assert total == abs(lat.determinant), "invariant factors must multiply to |det|"
    return DiscriminantGroup(orders=tuple(orders), generators=tuple(gens))


def _require_positive(lat: IntegralLattice, what: str) -> None:
    if lat.sign <= 0:
        raise NotPositiveDefiniteError(
            message=f"{what} requires a positive definite lattice"
        )


def _vectors_of_norm(lat: IntegralLattice, value: int) -> list[tuple[int, ...]]:
    """All lattice vectors of the exact given norm, one per +-pair, sorted."""
    problem = CosetProblem(lat.gram, [0] * lat.rank, radius=Fraction(value))
    hits = enumerate_in_coset(problem)
    found = {sign_normalize(x) for x, v in hits if v == value}
    return sorted(found)


def roots(lat: IntegralLattice) -> list[tuple[int, ...]]:
    """Norm-2 lattice vectors, one representative per +-pair, lex sorted."""
    _require_positive(lat, "roots")
    return _vectors_of_norm(lat, 2)


def unit_vectors(lat: IntegralLattice) -> list[tuple[int, ...]]:
    _require_positive(lat, "unit vector search")
    return _vectors_of_norm(lat, 1)


def is_minimal(lat: IntegralLattice) -> bool:
    """True when the lattice has no vectors of norm 1."""
    return not unit_vectors(lat)


def is_diagonal(lat: IntegralLattice) -> bool:
    """True exactly when the lattice is isometric to the standard cube lattice.

    Norm-1 vectors are pairwise orthogonal or parallel, so spanning rank n
    forces an orthonormal basis and unimodularity.
    """
    _require_positive(lat, "is_diagonal")
    units = unit_vectors(lat)
    return bool(units) and rational_rank(units) == lat.rank


def is_diagonal_bimodular(lat: IntegralLattice) -> bool:
    """True exactly when the lattice is the cube lattice plus one doubled axis.

    Checks |det| = 2, that norm-1 vectors span a hyperplane, and that their
    orthogonal complement in the lattice is generated by a norm-2 vector.
    """
    _require_positive(lat, "is_diagonal_bimodular")
    if abs(lat.determinant) != 2:
        raise NotBimodularError(f"|det| = {abs(lat.determinant)}, need 2")
    units = unit_vectors(lat)
    span = rational_rank(units) if units else 0
    if span != lat.rank - 1:
        return False
    if not units:
        # rank 1, positive definite, determinant 2: the doubled axis itself
        return True
    pairing_cols = mat_mul(lat.gram, transpose(units))
    kernel = integer_row_kernel(pairing_cols)
    if len(kernel) != 1:
        return False
    return quadratic_value(lat.gram, kernel[0]) == 2


def direct_sum(left: IntegralLattice, right: IntegralLattice) -> IntegralLattice:
    if left.sign != right.sign:
        raise ValueError("direct sum needs matching definiteness signs")
    n, m = left.rank, right.rank
    gram = [[0] * (n + m) for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            gram[i][j] = left.gram[i][j]
    for i in range(m):
        for j in range(m):
            gram[n + i][n + j] = right.gram[i][j]
    return validate_lattice(gram)


def identity_lattice(n: int) -> IntegralLattice:
    return validate_lattice([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def a1_lattice() -> IntegralLattice:
    return validate_lattice([[2]])


def diagonal_bimodular_lattice(n: int) -> IntegralLattice:
    """Cube lattice of rank n-1 plus one doubled axis; determinant 2."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    gram = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        gram[i][i] = 1
    gram[n - 1][n - 1] = 2
    return validate_lattice(gram)


def _tree_root_lattice(edges: list[tuple[int, int]], n: int) -> IntegralLattice:
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        gram[i][i] = 2
    for i, j in edges:
        gram[i][j] = gram[j][i] = -1
    return validate_lattice(gram)


# Trivalent-node descriptions of the two exceptional root lattices used in
# tests and generator pools: chains with one extra vertex attached.
E7_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]
E8_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)]


def e7_lattice() -> IntegralLattice:
    return _tree_root_lattice(E7_EDGES, 7)


def e8_lattice() -> IntegralLattice:
    return _tree_root_lattice(E8_EDGES, 8)


def lattice_in_image(lat: IntegralLattice, pairings) -> bool:
    """Whether an integer pairing vector is realized by a lattice vector."""
    sol = mat_vec(invert_matrix(lat.gram), list(pairings))
    return all(x.denominator == 1 for x in sol)


def characteristic_covectors_sample(lat: IntegralLattice, shifts) -> list[Covector]:
    """Base characteristic translated by 2*shift for each integer shift."""
    chi = base_characteristic(lat)
    return [chi.translate([2 * s for s in shift]) for shift in shifts]


@dataclass(frozen=True)
class RootGraph:
    """Pairing graph of an independent root set: edges carry r_i . r_j."""

    vertices: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int, int], ...]


def root_graph(lat: IntegralLattice, vectors) -> RootGraph:
    """Build the graph of an independent set of norm-2 vectors.

    Distinct independent roots pair to -1, 0, or +1 by Cauchy-Schwarz; edges
    record the nonzero pairings.
    """
    _require_positive(lat, "root_graph")
    vecs = [tuple(int(x) for x in v) for v in vectors]
    for v in vecs:
        if quadratic_value(lat.gram, v) != 2:
            raise NotRootsError(f"vector {v} does not have norm 2")
    if vecs and rational_rank(vecs) != len(vecs):
        raise NotIndependentError("root set is linearly dependent")
    edges = []
    for i, j in itertools.combinations(range(len(vecs)), 2):
        w = int(sum(vecs[i][a] * sum(lat.gram[a][b] * vecs[j][b] for b in range(lat.rank))
                    for a in range(lat.rank)))
        assert abs(w) <= 1, "independent roots cannot pair beyond +-1"
        if w != 0:
            edges.append((i, j, w))
    return RootGraph(vertices=tuple(vecs), edges=tuple(edges))


def is_bipartite(graph: RootGraph) -> bool:
    """Two-colorability of the underlying graph, edge weights ignored."""
    n = len(graph.vertices)
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j, _w in graph.edges:
        adj[i].append(j)
        adj[j].append(i)
    color = [None] * n
    for start in range(n):
        if color[start] is not None:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for nb in adj[v]:
                if color[nb] is None:
                    color[nb] = 1 - color[v]
                    queue.append(nb)
                elif color[nb] == color[v]:
                    return False
    return True
