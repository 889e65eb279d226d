"""Seifert fibered spaces, negative continued fractions, and plumbing trees.

A Seifert space Y(e; r_1, ..., r_k) over the sphere is encoded by an integer
central framing and nonzero rational leg parameters. When e <= -1 and every
r_i < -1 the space bounds a canonical star-shaped negative definite plumbing:
the central vertex carries weight e and leg i becomes a chain whose weights
are the negative continued fraction expansion of r_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    ExpressionParseError,
    NotDefiniteError,
    NotNegativeDefiniteError,
    NotRationalHomologySphereError,
    UnnormalizedSeifertDataError,
    ZeroLegFramingError,
)
from .lattice import E8_EDGES, IntegralLattice, validate_lattice


@dataclass(frozen=True)
class SeifertData:
    """Seifert invariants (central framing, leg parameters) over the sphere."""

    central: int
    legs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "legs", tuple(Fraction(r) for r in self.legs))
        for i, r in enumerate(self.legs):
            if r == 0:
                raise ZeroLegFramingError(f"leg {i + 1} has framing 0")
        if self.euler_number == 0:
            raise NotRationalHomologySphereError(
                "Euler number vanishes, first homology is infinite"
            )

    @property
    def euler_number(self) -> Fraction:
        return Fraction(self.central) - sum(1 / r for r in self.legs)


def reverse_orientation(data: SeifertData) -> SeifertData:
    """The same space with reversed orientation."""
    return SeifertData(-data.central, tuple(-r for r in data.legs))


def h1_order(data: SeifertData) -> int:
    """Order of the first homology group."""
    scale = 1
    for r in data.legs:
        scale *= abs(r.numerator)
    order = scale * abs(data.euler_number)
    assert order.denominator == 1
    return int(order)


@dataclass(frozen=True)
class NcfExpansion:
    """Negative continued fraction a_1 - 1/(a_2 - 1/(...))."""

    coefficients: tuple[int, ...]

    def evaluate(self) -> Fraction:
        value = Fraction(self.coefficients[-1])
        for a in reversed(self.coefficients[:-1]):
            value = a - 1 / value
        return value


def neg_continued_fraction(value: Fraction) -> NcfExpansion:
    """Expand a rational into its negative continued fraction.

    Each step takes the floor, so every tail lies in (-inf, -1) and all
    coefficients beyond a value below -1 are at most -2.
    """
    remainder = Fraction(value)
    coefficients = []
    while True:
        a = remainder.numerator // remainder.denominator
        coefficients.append(a)
        if remainder == a:
            break
        remainder = -1 / (remainder - a)
    return NcfExpansion(tuple(coefficients))


@dataclass(frozen=True)
class PlumbingTree:
    """Weighted tree; vertices carry integer framings, edges are unordered."""

    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    star_center: int | None = None

    def __post_init__(self):
        n = len(self.weights)
        if n == 0:
            raise ValueError("a plumbing tree needs at least one vertex")
        if len(self.edges) != n - 1:
            raise ValueError(f"{len(self.edges)} edges cannot form a tree on {n} vertices")
        seen = set()
        for i, j in self.edges:
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise ValueError(f"invalid edge ({i}, {j})")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ValueError(f"duplicate edge ({i}, {j})")
            seen.add(key)
        reached = {0}
        frontier = [0]
        adjacency = self.adjacency
        while frontier:
            v = frontier.pop()
            for w in adjacency[v]:
                if w not in reached:
                    reached.add(w)
                    frontier.append(w)
        if len(reached) != n:
            raise ValueError("edge set is disconnected")

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        neighbors = [[] for _ in self.weights]
        for i, j in self.edges:
            neighbors[i].append(j)
            neighbors[j].append(i)
        return tuple(tuple(sorted(ns)) for ns in neighbors)

    @property
    def rank(self) -> int:
        return len(self.weights)


def gram(tree: PlumbingTree) -> IntegralLattice:
    """Intersection lattice of the plumbed 4-manifold."""
    n = tree.rank
    entries = [[0] * n for _ in range(n)]
    for i, w in enumerate(tree.weights):
        entries[i][i] = w
    for i, j in tree.edges:
        entries[i][j] = 1
        entries[j][i] = 1
    return validate_lattice(entries)


def bad_vertex_indices(tree: PlumbingTree) -> tuple[int, ...]:
    """Vertices whose framing exceeds the negative of their valence."""
    degree = [0] * tree.rank
    for i, j in tree.edges:
        degree[i] += 1
        degree[j] += 1
    return tuple(v for v in range(tree.rank) if tree.weights[v] > -degree[v])


def bad_vertices(tree: PlumbingTree) -> int:
    """Number of vertices whose framing exceeds the negative of their valence."""
    return len(bad_vertex_indices(tree))


def canonical_plumbing(data: SeifertData) -> PlumbingTree:
    """Star-shaped negative definite plumbing of a Seifert space.

    Requires the normal form with central framing <= -1 and every leg
    parameter below -1; the tree determinant then realizes the homology
    order.
    """
    if data.central > -1:
        raise UnnormalizedSeifertDataError(
            f"central framing {data.central} exceeds -1"
        )
    for i, r in enumerate(data.legs):
        if r >= -1:
            raise UnnormalizedSeifertDataError(
                f"leg {i + 1} parameter {r} is not below -1"
            )
    weights = [data.central]
    edges = []
    for r in data.legs:
        chain = neg_continued_fraction(r).coefficients
        previous = 0
        for w in chain:
            weights.append(w)
            edges.append((previous, len(weights) - 1))
            previous = len(weights) - 1
    tree = PlumbingTree(tuple(weights), tuple(edges), star_center=0)
    try:
        lat = gram(tree)
    except NotDefiniteError as err:
        raise NotNegativeDefiniteError(
            "canonical plumbing is not negative definite"
        ) from err
    if lat.sign >= 0:
        raise NotNegativeDefiniteError(
            "canonical plumbing is not negative definite"
        )
    assert abs(lat.determinant) == h1_order(data)
    return tree


def negative_e8_tree() -> PlumbingTree:
    """The plumbing tree of -2 framings along the E8 graph."""
    return PlumbingTree((-2,) * 8, tuple(E8_EDGES))


@dataclass(frozen=True)
class PoincareAtom:
    """The Poincare homology sphere, possibly orientation-reversed."""

    orientation: int = 1

    def __post_init__(self):
        assert self.orientation in (1, -1)


@dataclass(frozen=True)
class ExpressionTerm:
    count: int
    atom: PoincareAtom | SeifertData


@dataclass(frozen=True)
class ConnectedSum:
    terms: tuple[ExpressionTerm, ...]
    source: str = field(default="", compare=False)


class _Parser:
    """Recursive descent over  expr := term ('+' term)*  with
    term := [count '*'] atom  and  atom := 'P' | '-' atom | 'Y(int; rat, ...)'.
    """

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ExpressionParseError:
        return ExpressionParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        self.skip_ws()
        if self.peek() != ch:
            raise self.error(f"expected '{ch}'")
        self.pos += 1

    def digits(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected digits")
        return int(self.text[start:self.pos])

    def integer(self) -> int:
        self.skip_ws()
        sign = 1
        if self.peek() == "-":
            sign = -1
            self.pos += 1
        return sign * self.digits()

    def rational(self) -> Fraction:
        numerator = self.integer()
        self.skip_ws()
        if self.peek() != "/":
            return Fraction(numerator)
        self.pos += 1
        self.skip_ws()
        denominator = self.digits()
        if denominator == 0:
            raise self.error("zero denominator")
        return Fraction(numerator, denominator)

    def atom(self) -> PoincareAtom | SeifertData:
        self.skip_ws()
        ch = self.peek()
        if ch == "P":
            self.pos += 1
            return PoincareAtom()
        if ch == "-":
            self.pos += 1
            inner = self.atom()
            if isinstance(inner, PoincareAtom):
                return PoincareAtom(-inner.orientation)
            return reverse_orientation(inner)
        if ch == "Y":
            self.pos += 1
            self.expect("(")
            central = self.integer()
            self.expect(";")
            legs = [self.rational()]
            self.skip_ws()
            while self.peek() == ",":
                self.pos += 1
                legs.append(self.rational())
                self.skip_ws()
            self.expect(")")
            return SeifertData(central, tuple(legs))
        raise self.error("expected 'P', '-', or 'Y('")

    def term(self) -> ExpressionTerm:
        self.skip_ws()
        count = 1
        if self.peek().isdigit():
            count = self.digits()
            if count == 0:
                raise self.error("multiplicity must be positive")
            self.expect("*")
        return ExpressionTerm(count, self.atom())

    def expression(self) -> ConnectedSum:
        terms = [self.term()]
        self.skip_ws()
        while self.peek() == "+":
            self.pos += 1
            terms.append(self.term())
            self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("unexpected trailing input")
        return ConnectedSum(tuple(terms), source=self.text)


def parse_expression(text: str) -> ConnectedSum:
    """Parse a connected sum expression such as '3*P + Y(2; 15/13, 17/3, 23/22)'."""
    return _Parser(text).expression()


def parse_seifert(text: str) -> SeifertData:
    """Parse a single 'Y(...)' description."""
    parser = _Parser(text)
    atom = parser.atom()
    parser.skip_ws()
    if parser.pos != len(parser.text):
        raise parser.error("unexpected trailing input")
    if not isinstance(atom, SeifertData):
        raise parser.error("expected a 'Y(...)' description")
    return atom
