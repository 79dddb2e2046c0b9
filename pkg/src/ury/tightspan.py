"""Extremal (Katetov) functions and the tight span of a finite metric space.

A function ``f >= 0`` on a metric space is *admissible* when
``d(x,y) <= f(x) + f(y)`` for all pairs, and *extremal* when it is also
pointwise minimal among admissible functions.  The extremal functions,
carrying the sup-metric ``rho(f,g) = max |f - g|``, form the tight span
(injective hull) of the space; the map ``a -> f_a = d(a, .)`` embeds the
space isometrically into it.  At finite scale the interesting skeleton is
the vertex set of the admissibility polyhedron
``{f >= 0 : f(x) + f(y) >= d(x,y)}``, which this module enumerates exactly.

Extremality is decided by single-coordinate pinning: ``f`` admissible is
extremal iff every coordinate is either 0 or tight in some pair constraint.
Lowering one free coordinate keeps all other constraints intact, and any
``g <= f`` that differs somewhere must break the first pinned pair it
undercuts, so pinning and pointwise minimality coincide (the test suite
keeps this honest against a brute-force oracle).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .errors import (
    DegeneratePath,
    NotAdmissible,
    NotAdmissibleOnSubset,
    SpaceMismatch,
    TooLarge,
)
from .metric import FiniteMetricSpace
from .rational import as_rational

TIGHT_SPAN_MAX_POINTS = 6


@dataclass(frozen=True)
class KatetovFunction:
    """A nonnegative rational function on the points of a space."""

    space: FiniteMetricSpace
    values: tuple[Fraction, ...]

    def __init__(self, space: FiniteMetricSpace, values: Sequence):
        values = tuple(as_rational(v) for v in values)
        if len(values) != space.n:
            raise ValueError(f"{len(values)} values for a {space.n}-point space")
        if any(v < 0 for v in values):
            raise ValueError("values must be nonnegative")
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "values", values)

    def __call__(self, x: int) -> Fraction:
        return self.values[x]


def is_admissible_function(f: KatetovFunction) -> tuple[bool, tuple[int, int] | None]:
    """True iff d(x,y) <= f(x) + f(y) everywhere; else the first bad pair."""
    d = f.space.matrix
    n = f.space.n
    for x in range(n):
        for y in range(x + 1, n):
            if d[x][y] > f.values[x] + f.values[y]:
                return False, (x, y)
    return True, None


def is_extremal(f: KatetovFunction) -> bool:
    """Admissible and pointwise minimal (single-coordinate pinning test)."""
    ok, _ = is_admissible_function(f)
    if not ok:
        return False
    d = f.space.matrix
    n = f.space.n
    for x in range(n):
        if f.values[x] == 0:
            continue
        if not any(f.values[x] + f.values[y] == d[x][y] for y in range(n) if y != x):
            return False
    return True


def extremal_below(g: KatetovFunction) -> KatetovFunction:
    """An extremal function below ``g``, by cyclic coordinate descent.

    Each sweep replaces f(x) with max(0, max_y (d(x,y) - f(y))), the least
    value admissible against the current others; sweeps repeat until one
    changes nothing.  Values never increase, admissibility is preserved
    throughout, and extremal inputs are returned unchanged.
    """
    ok, pair = is_admissible_function(g)
    if not ok:
        raise NotAdmissible(pair)
    d = g.space.matrix
    n = g.space.n
    values = list(g.values)
    changed = True
    while changed:
        changed = False
        for x in range(n):
            floor = max(
                (d[x][y] - values[y] for y in range(n) if y != x),
                default=Fraction(0),
            )
            target = max(Fraction(0), floor)
            if target != values[x]:
                values[x] = target
                changed = True
    return KatetovFunction(g.space, values)


def kuratowski(space: FiniteMetricSpace, a: int) -> KatetovFunction:
    """The distance function ``f_a = d(a, .)``; always extremal."""
    return KatetovFunction(space, space.matrix[a])


def sup_distance(f: KatetovFunction, g: KatetovFunction) -> Fraction:
    """Sup-metric ``max_x |f(x) - g(x)|`` between functions on one space."""
    if f.space != g.space:
        raise SpaceMismatch("functions live on different spaces")
    return max(abs(a - b) for a, b in zip(f.values, g.values))


def extend_radius_function(
    space: FiniteMetricSpace, subset: Sequence[int], r: Sequence
) -> KatetovFunction:
    """Extend admissible radius data from a subset to the whole space.

    Off the subset the extension is ``R(z) = min_a (r(a) + d(z, a))``; the
    result satisfies d(x,y) <= R(x) + R(y) everywhere and restricts to ``r``.
    """
    subset = tuple(subset)
    r = tuple(as_rational(v) for v in r)
    if len(subset) != len(r):
        raise ValueError(f"{len(subset)} subset points but {len(r)} radii")
    if not subset:
        raise ValueError("subset must be nonempty")
    if len(set(subset)) != len(subset):
        raise ValueError("subset indices must be distinct")
    if any(not 0 <= a < space.n for a in subset):
        raise ValueError("subset index out of range")
    if any(v <= 0 for v in r):
        raise ValueError("radii must be positive")
    d = space.matrix
    for i in range(len(subset)):
        for j in range(i + 1, len(subset)):
            if d[subset[i]][subset[j]] > r[i] + r[j]:
                raise NotAdmissibleOnSubset((i, j))
    by_index = dict(zip(subset, r))
    values = [
        by_index[z]
        if z in by_index
        else min(rv + d[z][a] for a, rv in zip(subset, r))
        for z in range(space.n)
    ]
    return KatetovFunction(space, values)


# ---------------------------------------------------------------------------
# Vertex enumeration of the admissibility polyhedron
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TightSpanVertexSet:
    """All polyhedron vertices, each admissible and extremal, sorted
    lexicographically by values and duplicate-free."""

    space: FiniteMetricSpace
    vertices: tuple[KatetovFunction, ...]


def _solve_exact(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """Solve the square system a x = b over the rationals; None if singular."""
    n = len(a)
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        inv = m[col][col]
        m[col] = [v / inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [v - factor * w for v, w in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def tight_span_vertices(space: FiniteMetricSpace) -> TightSpanVertexSet:
    """Enumerate the vertices of {f >= 0 : f(x) + f(y) >= d(x,y)} exactly.

    Every choice of n constraints (coordinate zero or pair tightness) with a
    unique solution is solved by rational elimination; feasible, extremal
    solutions are kept.  Enforced limit: n <= 6 (the subset count is
    combinatorial); larger spaces are rejected, never approximated.
    """
    n = space.n
    if n > TIGHT_SPAN_MAX_POINTS:
        raise TooLarge(f"vertex enumeration is limited to {TIGHT_SPAN_MAX_POINTS} points")
    d = space.matrix

    constraints: list[tuple[tuple[Fraction, ...], Fraction, int]] = []
    for i in range(n):
        row = [Fraction(0)] * n
        row[i] = Fraction(1)
        constraints.append((tuple(row), Fraction(0), 1 << i))
    for i in range(n):
        for j in range(i + 1, n):
            row = [Fraction(0)] * n
            row[i] = row[j] = Fraction(1)
            constraints.append((tuple(row), d[i][j], (1 << i) | (1 << j)))

    full_mask = (1 << n) - 1
    seen: dict[tuple[Fraction, ...], None] = {}
    for chosen in combinations(constraints, n):
        mask = 0
        for _, _, m in chosen:
            mask |= m
        if mask != full_mask:
            continue
        solution = _solve_exact([list(c[0]) for c in chosen], [c[1] for c in chosen])
        if solution is None:
            continue
        if any(v < 0 for v in solution):
            continue
        if any(solution[i] + solution[j] < d[i][j] for i in range(n) for j in range(i + 1, n)):
            continue
        candidate = KatetovFunction(space, solution)
        if is_extremal(candidate):
            seen.setdefault(candidate.values)

    vertices = tuple(KatetovFunction(space, v) for v in sorted(seen))
    return TightSpanVertexSet(space, vertices)


def tripod_center(space: FiniteMetricSpace) -> KatetovFunction:
    """Closed-form Steiner point of a 3-point space: leg lengths
    ((d_ab + d_ac - d_bc)/2, ...)."""
    if space.n != 3:
        raise ValueError("tripod center is defined for 3-point spaces")
    d = space.matrix
    legs = [
        (d[0][1] + d[0][2] - d[1][2]) / 2,
        (d[0][1] + d[1][2] - d[0][2]) / 2,
        (d[0][2] + d[1][2] - d[0][1]) / 2,
    ]
    return KatetovFunction(space, legs)


# ---------------------------------------------------------------------------
# Max-norm polyline verification (two-point hull candidates in the plane)
# ---------------------------------------------------------------------------

Point2 = tuple[Fraction, Fraction]


def chebyshev(p: Point2, q: Point2) -> Fraction:
    return max(abs(p[0] - q[0]), abs(p[1] - q[1]))


@dataclass(frozen=True)
class PathHullCandidate:
    """A polyline in the max-norm plane proposed as a hull of a 2-point set.

    ``breakpoints`` trace the polyline; its first and last points are the
    designated endpoints standing in for the embedded copy of ``a_points``.
    """

    breakpoints: tuple[Point2, ...]
    a_points: tuple[Point2, Point2]

    def __init__(self, breakpoints: Sequence, a_points: Sequence):
        bps = tuple((as_rational(x), as_rational(y)) for x, y in breakpoints)
        a = tuple((as_rational(x), as_rational(y)) for x, y in a_points)
        if len(a) != 2:
            raise ValueError("exactly two reference points are required")
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "a_points", (a[0], a[1]))


@dataclass(frozen=True)
class IsometryViolation:
    param_a: Fraction
    param_b: Fraction
    expected: Fraction
    actual: Fraction


@dataclass(frozen=True)
class HullCheckReport:
    ok: bool
    endpoint_ok: bool
    endpoint_distance: Fraction
    reference_distance: Fraction
    isometry_ok: bool
    first_violation: IsometryViolation | None
    total_length: Fraction
    sample_count: int


def verify_hull_candidate(candidate: PathHullCandidate, step) -> HullCheckReport:
    """Sample the polyline by arclength and verify segment isometry exactly.

    Checks (i) that the polyline endpoints realize the max-norm distance of
    the reference pair and (ii) that max-norm distances between sampled
    points equal their arclength parameter differences.  ``step`` must be a
    rational of the form 1/k (it fixes the sampling resolution).
    """
    step = as_rational(step)
    if step <= 0 or (1 / step).denominator != 1:
        raise ValueError(f"step must be 1/k for a positive integer k, got {step}")
    bps = candidate.breakpoints
    if len(bps) < 2:
        raise DegeneratePath("a polyline needs at least two breakpoints")
    if any(bps[s] == bps[s + 1] for s in range(len(bps) - 1)):
        raise DegeneratePath("consecutive breakpoints must be distinct")

    lengths = [chebyshev(bps[s], bps[s + 1]) for s in range(len(bps) - 1)]
    cumulative = [Fraction(0)]
    for length in lengths:
        cumulative.append(cumulative[-1] + length)
    total = cumulative[-1]

    params = [k * step for k in range(int(total / step) + 1)]
    if params[-1] != total:
        params.append(total)

    def point_at(t: Fraction) -> Point2:
        for s, length in enumerate(lengths):
            if t <= cumulative[s + 1]:
                frac = (t - cumulative[s]) / length
                ax, ay = bps[s]
                bx, by = bps[s + 1]
                return (ax + frac * (bx - ax), ay + frac * (by - ay))
        raise AssertionError("parameter out of range")

    samples = [point_at(t) for t in params]
    isometry_ok = True
    first_violation = None
    for i in range(len(params)):
        for j in range(i + 1, len(params)):
            actual = chebyshev(samples[i], samples[j])
            expected = params[j] - params[i]
            if actual != expected:
                isometry_ok = False
                first_violation = IsometryViolation(params[i], params[j], expected, actual)
                break
        if not isometry_ok:
            break

    endpoint_distance = chebyshev(bps[0], bps[-1])
    reference_distance = chebyshev(*candidate.a_points)
    endpoint_ok = endpoint_distance == reference_distance
    return HullCheckReport(
        ok=endpoint_ok and isometry_ok,
        endpoint_ok=endpoint_ok,
        endpoint_distance=endpoint_distance,
        reference_distance=reference_distance,
        isometry_ok=isometry_ok,
        first_violation=first_violation,
        total_length=total,
        sample_count=len(params),
    )
