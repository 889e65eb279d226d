"""Branch-and-bound search for shortest vectors in affine cosets of Z^n.

The problem solved here: given a symmetric positive definite rational form Q
and a rational target t, minimize (t + x)^T Q (t + x) over integer vectors x.
Levels are eliminated through an exact LDL^T factorization and explored
depth-first, each level visiting integer candidates in nearest-first zig-zag
order; the first full descent therefore reproduces the nearest-plane rounding
of -t and seeds the pruning radius. All arithmetic is exact: denominators are
cleared once per factorization, so the inner loop works on plain integers.

Optional LLL preprocessing conjugates the problem by a unimodular matrix and
never affects results, only node counts. Top-level branches can be split
across worker threads; the merged outcome is identical to a serial run.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import floor, lcm

from .errors import (
    BudgetExhaustedError,
    NotSymmetricError,
    RadiusEmptyError,
)
from .linalg import (
    first_asymmetry,
    integer_matrix_inverse,
    ldl_decomposition,
    mat_vec,
    sign_normalize,
)
from .reduction import lll_reduce_gram


def _round_half_up(x: Fraction) -> int:
    num, den = (2 * x + 1).numerator, (2 * x + 1).denominator
    return num // (2 * den)


@dataclass(frozen=True)
class CosetProblem:
    """Minimize (target + x)^T form (target + x) over x in Z^n.

    form must be symmetric positive definite (checked when factored); radius,
    when given, is an inclusive upper bound on accepted values.
    """

    form: tuple[tuple[Fraction, ...], ...]
    target: tuple[Fraction, ...]
    radius: Fraction | None = None

    def __init__(self, form, target, radius=None):
        rows = tuple(tuple(Fraction(x) for x in row) for row in form)
        bad = first_asymmetry(rows)
        if bad is not None:
            i, j = bad
            raise NotSymmetricError(i, j, rows[i][j], rows[j][i])
        tgt = tuple(Fraction(x) for x in target)
        if len(tgt) != len(rows):
            raise ValueError("target length does not match form rank")
        object.__setattr__(self, "form", rows)
        object.__setattr__(self, "target", tgt)
        object.__setattr__(self, "radius", None if radius is None else Fraction(radius))

    @property
    def rank(self) -> int:
        return len(self.form)


@dataclass(frozen=True)
class EnumerationResult:
    min_norm: Fraction
    minimizers: tuple[tuple[int, ...], ...]
    nodes_visited: int


class _Budget:
    """Node counter shared across workers; raises once the limit is passed."""

    __slots__ = ("count", "limit", "lock")

    def __init__(self, limit):
        self.count = 0
        self.limit = limit
        self.lock = threading.Lock()

    def spend(self, n: int) -> None:
        with self.lock:
            self.count += n
            if self.limit is not None and self.count > self.limit:
                raise BudgetExhaustedError(self.count, self.limit)


class _SharedBest:
    __slots__ = ("value", "lock")

    def __init__(self):
        self.value = None
        self.lock = threading.Lock()

    def offer(self, v) -> None:
        with self.lock:
            if self.value is None or v < self.value:
                self.value = v


def _factor(form):
    lower, diag = ldl_decomposition(form)
    n = len(diag)
    cols = [
        [(j, lower[j][i]) for j in range(i + 1, n) if lower[j][i] != 0]
        for i in range(n)
    ]
    return cols, diag


class _Scaled:
    """Denominator-cleared copy of the factored problem.

    At level i the offset base_i = target_i + sum_j L_ji (target_j + x_j) is
    an affine function of the integer choices x_j, so a per-level scale s_i
    (the lcm of the relevant denominators) makes s_i * base_i an integer for
    every x. Values are tracked as integer multiples of 1 / value_scale, with
    value_scale chosen so each level cost d_i * u^2 scales to coeff_i * U^2
    for U = s_i * u. The search then runs entirely on integers, with every
    comparison equal to its unscaled counterpart.
    """

    __slots__ = ("n", "scales", "consts", "scols", "coeff", "value_scale")

    def __init__(self, cols, diag, target):
        n = len(diag)
        self.n = n
        scales = []
        consts = []
        scols = []
        for i in range(n):
            const = target[i] + sum(
                (c * target[j] for j, c in cols[i]), Fraction(0)
            )
            s = lcm(const.denominator, *(c.denominator for _j, c in cols[i]))
            scales.append(s)
            consts.append(int(const * s))
            scols.append(tuple((j, int(c * s)) for j, c in cols[i]))
        value_scale = 1
        for i in range(n):
            value_scale = lcm(value_scale, scales[i] ** 2 * diag[i].denominator)
        coeff = []
        for i in range(n):
            c = diag[i] * value_scale / scales[i] ** 2
            assert c.denominator == 1
            coeff.append(c.numerator)
        self.scales = scales
        self.consts = consts
        self.scols = scols
        self.coeff = coeff
        self.value_scale = value_scale


def _babai_value(cols, diag, target):
    """Value of the nearest-plane rounding of -target; the initial radius."""
    n = len(diag)
    w = [Fraction(0)] * n
    total = Fraction(0)
    for i in range(n - 1, -1, -1):
        b = target[i] + sum(coef * w[j] for j, coef in cols[i])
        cand = _round_half_up(-b)
        w[i] = target[i] + cand
        total += diag[i] * (cand + b) ** 2
    return total


class _Worker:
    """One depth-first searcher over levels start..0 with a fixed prefix.

    All values handled here (cap, best, shared best, recorded totals) are in
    value_scale units of the _Scaled context.
    """

    def __init__(self, scaled, mode, cap, shared, budget):
        self.sc = scaled
        n = scaled.n
        self.n = n
        self.mode = mode
        self.cap = cap  # fixed inclusive radius (collect, or shrink with radius)
        self.shared = shared
        self.budget = budget
        self.x = [0] * n
        self.part = [0] * n
        self.sbase = [0] * n
        self.up = [0] * n
        self.down = [0] * n
        self.up_ok = [False] * n
        self.down_ok = [False] * n
        self.best = None
        self.hits: list = []
        self.nodes = 0
        self.pending = 0  # nodes not yet reported to the shared budget

    def _spend(self) -> None:
        self.nodes += 1
        if self.budget is None:
            return
        self.pending += 1
        if self.pending >= 64:
            self.budget.spend(self.pending)
            self.pending = 0

    def flush_budget(self) -> None:
        if self.budget is not None and self.pending:
            self.budget.spend(self.pending)
            self.pending = 0

    def _limit(self):
        m = self.cap
        if self.best is not None and (m is None or self.best < m):
            m = self.best
        if self.shared is not None:
            s = self.shared.value
            if s is not None and (m is None or s < m):
                m = s
        return m

    def _enter(self, i: int) -> None:
        sc = self.sc
        x = self.x
        b = sc.consts[i]
        for j, c in sc.scols[i]:
            b += c * x[j]
        self.sbase[i] = b
        s = sc.scales[i]
        r0 = (s - 2 * b) // (2 * s)
        self.up[i] = r0
        self.down[i] = r0 - 1
        self.up_ok[i] = True
        self.down_ok[i] = True

    def _record(self, total: int) -> None:
        if self.mode == "collect":
            self.hits.append((tuple(self.x), total))
            return
        if self.best is None or total < self.best:
            self.best = total
            self.hits = [tuple(self.x)]
            if self.shared is not None:
                self.shared.offer(total)
        elif total == self.best:
            self.hits.append(tuple(self.x))

    def run(self, start: int) -> None:
        if self.n == 0:
            self._record(0)
            return
        scales = self.sc.scales
        coeff = self.sc.coeff
        sbase = self.sbase
        part = self.part
        up, down = self.up, self.down
        up_ok, down_ok = self.up_ok, self.down_ok
        i = start
        self._enter(i)
        while True:
            if up_ok[i] and down_ok[i]:
                du = scales[i] * up[i] + sbase[i]
                dd = scales[i] * down[i] + sbase[i]
                side = 1 if abs(du) <= abs(dd) else -1
            elif up_ok[i]:
                side = 1
            elif down_ok[i]:
                side = -1
            else:
                i += 1
                if i > start:
                    return
                continue
            cand = up[i] if side == 1 else down[i]
            u = scales[i] * cand + sbase[i]
            cost = coeff[i] * u * u
            self._spend()
            limit = self._limit()
            if limit is not None and part[i] + cost > limit:
                if side == 1:
                    up_ok[i] = False
                else:
                    down_ok[i] = False
                continue
            if side == 1:
                up[i] += 1
            else:
                down[i] -= 1
            self.x[i] = cand
            if i == 0:
                self._record(part[0] + cost)
                continue
            part[i - 1] = part[i] + cost
            i -= 1
            self._enter(i)

    def run_with_top(self, top_values) -> None:
        """Explore only the given outermost-level candidates, in order."""
        sc = self.sc
        i = self.n - 1
        s = sc.scales[i]
        b = sc.consts[i]
        for cand in top_values:
            u = s * cand + b
            cost = sc.coeff[i] * u * u
            self._spend()
            limit = self._limit()
            if limit is not None and cost > limit:
                continue
            self.x[i] = cand
            if i == 0:
                self._record(cost)
                continue
            self.part[i - 1] = cost
            self.run(i - 1)


def _top_candidates(diag, target, cap):
    """All outermost-level integer candidates within the inclusive cap."""
    i = len(diag) - 1
    b = target[i]
    r0 = _round_half_up(-b)
    out = [r0]
    step = 1
    while True:
        cand = r0 + step
        if diag[i] * (cand + b) ** 2 > cap:
            break
        out.append(cand)
        step += 1
    step = 1
    while True:
        cand = r0 - step
        if diag[i] * (cand + b) ** 2 > cap:
            break
        out.append(cand)
        step += 1
    out.sort(key=lambda c: (abs(c + b), -c))
    return out


def _solve(problem: CosetProblem, mode: str, reduce: bool, threads: int, node_budget):
    form = [list(row) for row in problem.form]
    target = list(problem.target)
    n = problem.rank

    unimod = None
    if reduce and n > 1:
        red, unimod = lll_reduce_gram(form)
        form = red
        inv = integer_matrix_inverse(unimod)
        target = mat_vec(inv, target)

    cols, diag = _factor(form)
    scaled = _Scaled(cols, diag, target)
    scale = scaled.value_scale
    budget = _Budget(node_budget) if node_budget is not None else None
    cap = problem.radius
    cap_scaled = None if cap is None else floor(cap * scale)

    if threads <= 1 or n <= 1:
        worker = _Worker(scaled, mode, cap_scaled, None, budget)
        worker.run(n - 1)
        worker.flush_budget()
        nodes = worker.nodes
        best, hits = worker.best, worker.hits
    else:
        if mode == "collect":
            bound = cap
        else:
            babai = _babai_value(cols, diag, target)
            bound = babai if cap is None else min(babai, cap)
        tops = _top_candidates(diag, target, bound)
        chunks = [tops[k::threads] for k in range(threads)]
        shared = _SharedBest()
        if mode != "collect":
            shared.offer(floor(bound * scale))
        workers = [
            _Worker(scaled, mode, cap_scaled, shared, budget) for _ in chunks
        ]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [
                pool.submit(w.run_with_top, chunk)
                for w, chunk in zip(workers, chunks)
            ]
            for f in futures:
                f.result()
        for w in workers:
            w.flush_budget()
        nodes = sum(w.nodes for w in workers) + n  # include the bounding descent
        if mode == "collect":
            best = None
            hits = [h for w in workers for h in w.hits]
        else:
            mins = [w.best for w in workers if w.best is not None]
            best = min(mins) if mins else None
            hits = [h for w in workers if w.best == best for h in w.hits]

    if best is not None:
        best = Fraction(best, scale)
    if mode == "collect":
        hits = [(x, Fraction(v, scale)) for x, v in hits]

    if unimod is not None:
        if mode == "collect":
            hits = [
                (tuple(mat_vec(unimod, list(x))), val) for x, val in hits
            ]
        else:
            hits = [tuple(mat_vec(unimod, list(x))) for x in hits]
    return best, hits, nodes


def _collapse_signs(vectors):
    vs = set(vectors)
    out = set()
    for v in vs:
        neg = tuple(-c for c in v)
        out.add(sign_normalize(v) if neg in vs else v)
    return sorted(out)


def rational_cholesky(form):
    """Exact LDL^T factorization of a symmetric positive definite form.

    Returns (lower, diag) with unit lower-triangular lower and positive
    rational diag; raises NotPositiveDefiniteError naming the first bad pivot.
    """
    rows = [list(row) for row in form]
    bad = first_asymmetry(rows)
    if bad is not None:
        i, j = bad
        raise NotSymmetricError(i, j, rows[i][j], rows[j][i])
    return ldl_decomposition(rows)


def shortest_in_coset(
    problem: CosetProblem,
    *,
    reduce: bool = False,
    threads: int = 1,
    node_budget: int | None = None,
) -> EnumerationResult:
    """Exact minimum of (target + x)^T form (target + x) with all minimizers.

    Minimizers are integer offset vectors x, with exact {x, -x} pairs collapsed
    to the representative whose first nonzero entry is positive, sorted
    lexicographically. Raises RadiusEmptyError when a radius was given and no
    coset point lies within it; BudgetExhaustedError when the node budget runs
    out first.
    """
    best, hits, nodes = _solve(problem, "shrink", reduce, threads, node_budget)
    if best is None:
        raise RadiusEmptyError(
            f"no coset point with value <= {problem.radius}"
        )
    return EnumerationResult(
        min_norm=best,
        minimizers=tuple(_collapse_signs(hits)),
        nodes_visited=nodes,
    )


def enumerate_in_coset(
    problem: CosetProblem,
    *,
    reduce: bool = False,
    threads: int = 1,
    node_budget: int | None = None,
) -> list[tuple[tuple[int, ...], Fraction]]:
    """All coset offsets x with value <= problem.radius, sorted by x.

    No sign collapsing here; callers that want one representative per +-pair
    do their own filtering.
    """
    if problem.radius is None:
        raise ValueError("enumerate_in_coset requires a radius")
    _best, hits, _nodes = _solve(problem, "collect", reduce, threads, node_budget)
    return sorted(hits)
