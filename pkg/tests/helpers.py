"""Shared random generators and deliberately naive oracles.

The oracles here re-derive expected answers by the dumbest route available
(plain loops, closed forms, full enumeration) so they stay independent of
the library code paths they check.
"""

from __future__ import annotations

import random
from fractions import Fraction

from ury import FiniteMetricSpace
from ury.construct import PrefixState
from ury.tightspan import KatetovFunction

DENOMINATORS = (1, 2, 3, 4, 5, 6, 8, 12, 16)


def rand_rational(rng: random.Random, lo: Fraction, hi: Fraction) -> Fraction:
    """A rational in [lo, hi] with a small denominator."""
    den = rng.choice(DENOMINATORS)
    lo_num = int(lo * den) + (0 if lo * den == int(lo * den) else 1)
    hi_num = int(hi * den)
    if hi_num < lo_num:
        return Fraction(lo)
    return Fraction(rng.randint(lo_num, hi_num), den)


def random_metric_space(rng: random.Random, n: int) -> FiniteMetricSpace:
    """A random n-point rational metric space.

    Mixes two shapes: entries confined to [1, 2] (triangle inequality is
    automatic) and shortest-path closures of random positive weights (these
    produce plenty of exactly tight triangles).
    """
    if n == 1 or rng.random() < 0.5:
        matrix = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                matrix[i][j] = matrix[j][i] = rand_rational(rng, Fraction(1), Fraction(2))
        return FiniteMetricSpace(matrix)
    weights = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            weights[i][j] = weights[j][i] = rand_rational(rng, Fraction(1, 4), Fraction(3))
    # Floyd-Warshall closure, exact.
    dist = [row[:] for row in weights]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if i != j:
                    via = dist[i][k] + dist[k][j] if i != k and j != k else dist[i][j]
                    if via < dist[i][j]:
                        dist[i][j] = via
    return FiniteMetricSpace(dist)


def random_tripod_space(rng: random.Random) -> tuple[FiniteMetricSpace, list[Fraction]]:
    """A 3-point space built from strictly positive tripod legs.

    Returns the space and its legs; d(i,j) = leg_i + leg_j, so all triangle
    inequalities are strict and the tight span has exactly 4 vertices.
    """
    legs = [rand_rational(rng, Fraction(1, 4), Fraction(3)) for _ in range(3)]
    matrix = [[Fraction(0)] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(i + 1, 3):
            matrix[i][j] = matrix[j][i] = legs[i] + legs[j]
    return FiniteMetricSpace(matrix), legs


def random_feasible_family(rng: random.Random, space: FiniteMetricSpace, k: int):
    """A pairwise-feasible ball family; mixes guaranteed-feasible radii
    (with occasional giant balls, to exercise containment removal) and
    rejection-sampled arbitrary radii."""
    from ury import BallFamily

    dmax = max(
        (space.distance(i, j) for i in space.points() for j in range(i)),
        default=Fraction(1),
    )
    while True:
        centers = [rng.randrange(space.n) for _ in range(k)]
        if rng.random() < 0.5:
            radii = [dmax / 2 + rand_rational(rng, Fraction(0), dmax) for _ in range(k)]
            if rng.random() < 0.4:
                radii[rng.randrange(k)] = 3 * dmax + 1
        else:
            radii = [rand_rational(rng, Fraction(1, 4), 2 * dmax) for _ in range(k)]
        balls = list(zip(centers, radii))
        feasible = all(
            space.distance(c1, c2) <= r1 + r2
            for i, (c1, r1) in enumerate(balls)
            for c2, r2 in balls[i + 1 :]
        )
        if feasible:
            return BallFamily(space, balls)


def random_pairwise_family(rng: random.Random, dim: int, count: int):
    """Boxes built around a shared core point: pairwise intersection is
    guaranteed (and, by the interval Helly property, so is the total one —
    which is exactly what the assertions re-derive through the library)."""
    from ury import Box

    core = [rand_rational(rng, Fraction(-2), Fraction(2)) for _ in range(dim)]
    boxes = []
    for _ in range(count):
        intervals = []
        for k in range(dim):
            lo = core[k] - rand_rational(rng, Fraction(0), Fraction(2))
            hi = core[k] + rand_rational(rng, Fraction(0), Fraction(2))
            intervals.append((lo, hi))
        boxes.append(Box(intervals))
    return boxes


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------

def oracle_is_metric(matrix) -> bool:
    """Plain-loop metric check over all ordered triples; no staging, no
    rescaling — independent of ury.metric.validate_metric."""
    n = len(matrix)
    for i in range(n):
        if matrix[i][i] != 0:
            return False
        for j in range(n):
            if matrix[i][j] != matrix[j][i]:
                return False
            if i != j and matrix[i][j] <= 0:
                return False
            for k in range(n):
                if matrix[i][k] > matrix[i][j] + matrix[j][k]:
                    return False
    return True


def oracle_is_extremal(f: KatetovFunction) -> bool:
    """Pointwise-minimality oracle: reduce each coordinate to the least
    value admissible against the others; f is extremal iff nothing drops."""
    d = f.space.matrix
    n = f.space.n
    for x in range(n):
        for y in range(x + 1, n):
            if d[x][y] > f.values[x] + f.values[y]:
                return False
    for x in range(n):
        least = max(
            [d[x][y] - f.values[y] for y in range(n) if y != x] + [Fraction(0)]
        )
        if f.values[x] != least:
            return False
    return True


def oracle_embedding(target: FiniteMetricSpace, prefix: PrefixState):
    """First exact injective mapping in lexicographic order, by systematic
    enumeration of image tuples (plain nested scans, no candidate buckets)."""
    t = target.n
    rho = prefix.rho
    d = target.matrix

    def extend(mapping: list[int]):
        k = len(mapping)
        if k == t:
            return tuple(mapping)
        for c in range(prefix.m):
            if c in mapping:
                continue
            if all(rho[c][mapping[i]] == d[k][i] for i in range(k)):
                result = extend(mapping + [c])
                if result is not None:
                    return result
        return None

    return extend([])
