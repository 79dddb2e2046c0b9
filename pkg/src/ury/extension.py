"""One-point metric extensions and finite ball intersection witnesses.

Given points ``x_1..x_k`` of a finite metric space and positive radii
``a_1..a_k`` satisfying the two-sided condition

    |a_i - a_j| <= d(x_i, x_j) <= a_i + a_j,

a new point ``y`` with ``d(y, x_i) = a_i`` always exists; distances from
``y`` to points off the support use the largest 1-Lipschitz-consistent
choice ``d(y, z) = min_i (a_i + d(x_i, z))``.  On top of that, a family of
closed balls whose centers are pairwise within radius-sum reach admits a
common point, found by first discarding every ball that strictly contains
another (such balls are redundant) and then placing ``y`` on the spheres of
all the survivors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import (
    EmptyFamily,
    EmptySupport,
    Inadmissible,
    PairwiseInfeasible,
)
from .metric import FiniteMetricSpace
from .rational import as_rational


@dataclass(frozen=True)
class ExtensionRequest:
    """A base space, distinct support indices, and matching positive radii."""

    base: FiniteMetricSpace
    support: tuple[int, ...]
    radii: tuple[Fraction, ...]

    def __init__(self, base: FiniteMetricSpace, support: Sequence[int], radii: Sequence):
        support = tuple(support)
        radii = tuple(as_rational(r) for r in radii)
        if not support:
            raise EmptySupport("extension support must be nonempty")
        if len(support) != len(radii):
            raise ValueError(f"{len(support)} support points but {len(radii)} radii")
        if len(set(support)) != len(support):
            raise ValueError("support indices must be distinct")
        if any(not 0 <= x < base.n for x in support):
            raise ValueError("support index out of range")
        if any(r <= 0 for r in radii):
            raise ValueError("radii must be positive")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "support", support)
        object.__setattr__(self, "radii", radii)


@dataclass(frozen=True)
class AdmissibilityResult:
    """Outcome of the two-sided radii check.

    When ``ok`` is false, ``pair`` gives the first failing pair of support
    positions (0-based, lexicographic) and ``side`` says which inequality
    broke: ``"lower"`` for |a_i - a_j| > d, ``"upper"`` for d > a_i + a_j.
    """

    ok: bool
    pair: tuple[int, int] | None = None
    side: str | None = None


def admissible(req: ExtensionRequest) -> AdmissibilityResult:
    """Check |a_i - a_j| <= d(x_i, x_j) <= a_i + a_j on every support pair."""
    d = req.base.matrix
    for i in range(len(req.support)):
        for j in range(i + 1, len(req.support)):
            dist = d[req.support[i]][req.support[j]]
            if abs(req.radii[i] - req.radii[j]) > dist:
                return AdmissibilityResult(False, (i, j), "lower")
            if dist > req.radii[i] + req.radii[j]:
                return AdmissibilityResult(False, (i, j), "upper")
    return AdmissibilityResult(True)


def extended_matrix(req: ExtensionRequest) -> list[list[Fraction]]:
    """The (n+1)x(n+1) matrix obtained by adjoining the new point last.

    Does not check admissibility; exposed for equivalence testing
    (admissible <=> this matrix is a metric).
    """
    base = req.base
    n = base.n
    by_index = dict(zip(req.support, req.radii))
    new_row = [
        by_index[z]
        if z in by_index
        else min(r + base.distance(x, z) for x, r in zip(req.support, req.radii))
        for z in range(n)
    ]
    matrix = [list(row) + [new_row[i]] for i, row in enumerate(base.matrix)]
    matrix.append(new_row + [Fraction(0)])
    return matrix


def extend_one_point(req: ExtensionRequest) -> FiniteMetricSpace:
    """Adjoin a point at exactly the requested distances from the support.

    Raises :class:`Inadmissible` when the radii fail the two-sided check.
    The result is re-validated in full as a guard against internal error.
    """
    check = admissible(req)
    if not check.ok:
        raise Inadmissible(check.pair, check.side)
    return FiniteMetricSpace(extended_matrix(req))


class Ball(NamedTuple):
    center: int
    radius: Fraction


@dataclass(frozen=True)
class BallFamily:
    """Closed balls ``B(x_i, r_i)`` over one base space.

    Pairwise feasibility (d <= r_i + r_j) is *not* an invariant here; the
    operations check it and report the witness pair.
    """

    base: FiniteMetricSpace
    balls: tuple[Ball, ...]

    def __init__(self, base: FiniteMetricSpace, balls: Sequence):
        normalized = tuple(Ball(int(c), as_rational(r)) for c, r in balls)
        if not normalized:
            raise EmptyFamily("a ball family must contain at least one ball")
        if any(not 0 <= b.center < base.n for b in normalized):
            raise ValueError("ball center out of range")
        if any(b.radius <= 0 for b in normalized):
            raise ValueError("ball radii must be positive")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "balls", normalized)


class RemovalRecord(NamedTuple):
    """Ball ``removed`` contains ball ``dominating``: lhs = r_removed is
    strictly greater than rhs = d(centers) + r_dominating."""

    removed: int
    dominating: int
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class ReductionTrace:
    survivors: tuple[int, ...]
    removals: tuple[RemovalRecord, ...]


def _check_pairwise_feasible(family: BallFamily) -> None:
    d = family.base.matrix
    balls = family.balls
    for i in range(len(balls)):
        for j in range(i + 1, len(balls)):
            dist = d[balls[i].center][balls[j].center]
            if dist > balls[i].radius + balls[j].radius:
                raise PairwiseInfeasible((i, j), dist, balls[i].radius + balls[j].radius)


def reduce_ball_family(family: BallFamily) -> ReductionTrace:
    """Discard containing balls until the two-sided condition holds pairwise.

    A ball ``i`` is removable when some surviving ``j`` has
    ``r_i > d(x_i, x_j) + r_j`` (then ``B(x_j, r_j)`` lies strictly inside
    ``B(x_i, r_i)``, so ``i`` is redundant for the intersection).  Each pass
    removes the lowest-index removable ball and rescans, which makes the
    trace deterministic.
    """
    _check_pairwise_feasible(family)
    d = family.base.matrix
    balls = family.balls
    survivors = list(range(len(balls)))
    removals: list[RemovalRecord] = []
    while True:
        removal = None
        for i in survivors:
            for j in survivors:
                if j == i:
                    continue
                bound = d[balls[i].center][balls[j].center] + balls[j].radius
                if balls[i].radius > bound:
                    removal = RemovalRecord(i, j, balls[i].radius, bound)
                    break
            if removal:
                break
        if removal is None:
            return ReductionTrace(tuple(survivors), tuple(removals))
        survivors.remove(removal.removed)
        removals.append(removal)


class CertificateEntry(NamedTuple):
    """Exact distance from the witness to one input ball's center."""

    ball: int
    center: int
    radius: Fraction
    distance: Fraction
    on_sphere: bool


@dataclass(frozen=True)
class WitnessResult:
    """A common point of the family, realized in a one-point extension.

    ``space`` is the base enlarged by the witness (index ``witness``); the
    certificate records, exactly, ``distance == radius`` for every surviving
    ball (sphere membership) and ``distance <= radius`` for removed ones.
    """

    space: FiniteMetricSpace
    witness: int
    trace: ReductionTrace
    certificate: tuple[CertificateEntry, ...]


def ball_intersection_witness(family: BallFamily) -> WitnessResult:
    """Produce a point lying on the sphere of every non-redundant ball.

    Reduces the family, then extends the base by one point whose distances
    to the surviving centers equal their radii exactly.  Membership in every
    removed ball follows from the containment chain and is re-verified on
    the extended matrix.
    """
    trace = reduce_ball_family(family)
    balls = family.balls
    # Surviving duplicates share center and radius (differing radii at one
    # center cannot both survive), so collapse them for the support.
    support: list[int] = []
    radii: list[Fraction] = []
    for i in trace.survivors:
        if balls[i].center not in support:
            support.append(balls[i].center)
            radii.append(balls[i].radius)
    ext = extend_one_point(ExtensionRequest(family.base, support, radii))
    y = family.base.n

    survivors = set(trace.survivors)
    certificate = []
    for k, ball in enumerate(balls):
        dist = ext.distance(y, ball.center)
        on_sphere = k in survivors
        if on_sphere:
            assert dist == ball.radius
        else:
            assert dist <= ball.radius
        certificate.append(CertificateEntry(k, ball.center, ball.radius, dist, on_sphere))
    return WitnessResult(ext, y, trace, tuple(certificate))
