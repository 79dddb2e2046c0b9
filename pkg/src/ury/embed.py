"""Exact isometric embedding search into a built prefix.

Finds injective maps of a small target space into a prefix that realize all
pairwise distances exactly, by depth-first backtracking over target points
in order.  Candidate images for point k must already match the k previously
established distances; candidates are served from per-point distance
buckets, and trying prefix indices in increasing order makes the first
complete map the lexicographically smallest one.

A negative search result never disproves embeddability — it only says the
target does not fit in *this* prefix, so the result carries the searched
length.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .construct import PrefixState
from .errors import InvalidPartialIsometry
from .metric import FiniteMetricSpace

FOUND = "found"
NOT_FOUND = "not-found-up-to"


@dataclass(frozen=True)
class EmbeddingResult:
    """Search outcome: mapping of target index -> prefix index when found,
    plus the prefix length that was searched either way."""

    status: str
    mapping: tuple[int, ...] | None
    searched_prefix_length: int


def _distance_buckets(prefix: PrefixState) -> list[dict[Fraction, list[int]]]:
    buckets: list[dict[Fraction, list[int]]] = []
    for u in range(prefix.m):
        by_value: dict[Fraction, list[int]] = {}
        for v in range(prefix.m):
            if v != u:
                by_value.setdefault(prefix.rho[u][v], []).append(v)
        buckets.append(by_value)
    return buckets


def find_isometric_embedding(
    target: FiniteMetricSpace, prefix: PrefixState
) -> EmbeddingResult:
    """Lexicographically smallest exact embedding of ``target``, if any."""
    t = target.n
    m = prefix.m
    if t > m:
        return EmbeddingResult(NOT_FOUND, None, m)

    buckets = _distance_buckets(prefix)
    bucket_sets = [
        {value: set(indices) for value, indices in per_point.items()}
        for per_point in buckets
    ]
    mapping: list[int] = []
    used: set[int] = set()

    def search(depth: int) -> bool:
        if depth == t:
            return True
        if depth == 0:
            candidates = range(m)
        else:
            first = buckets[mapping[0]].get(target.distance(depth, 0))
            if not first:
                return False
            candidates = [
                c
                for c in first
                if all(
                    c in bucket_sets[mapping[i]].get(target.distance(depth, i), ())
                    for i in range(1, depth)
                )
            ]
        for c in candidates:
            if c in used:
                continue
            mapping.append(c)
            used.add(c)
            if search(depth + 1):
                return True
            used.remove(c)
            mapping.pop()
        return False

    if search(0):
        return EmbeddingResult(FOUND, tuple(mapping), m)
    return EmbeddingResult(NOT_FOUND, None, m)


@dataclass(frozen=True)
class PartialIsometry:
    """Distance-preserving pairing of prefix points (sources -> images).

    Construction validates injectivity on both sides, index bounds, and
    exact distance agreement, raising :class:`InvalidPartialIsometry` with a
    witness pair otherwise.
    """

    prefix: PrefixState
    pairs: tuple[tuple[int, int], ...]

    def __init__(self, prefix: PrefixState, pairs):
        pairs = tuple((int(s), int(t)) for s, t in pairs)
        sources = [s for s, _ in pairs]
        images = [t for _, t in pairs]
        for value in sources + images:
            if not 0 <= value < prefix.m:
                raise InvalidPartialIsometry(f"index {value} out of range", witness=None)
        if len(set(sources)) != len(sources) or len(set(images)) != len(images):
            raise InvalidPartialIsometry("pairing must be injective on both sides", witness=None)
        for i in range(len(pairs)):
            for j in range(i + 1, len(pairs)):
                lhs = prefix.rho[pairs[i][0]][pairs[j][0]]
                rhs = prefix.rho[pairs[i][1]][pairs[j][1]]
                if lhs != rhs:
                    raise InvalidPartialIsometry(
                        f"pairs {i} and {j} disagree: {lhs} != {rhs}",
                        witness=(i, j),
                    )
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "pairs", pairs)


def extend_partial_isometry(
    p: PartialIsometry, new_source: int
) -> PartialIsometry | None:
    """Extend by one source point to the smallest compatible image.

    Returns None when no point of the prefix can serve as the image (the
    prefix is too short to contain one).
    """
    if not 0 <= new_source < p.prefix.m:
        raise InvalidPartialIsometry(f"index {new_source} out of range", witness=None)
    if any(s == new_source for s, _ in p.pairs):
        raise InvalidPartialIsometry(f"source {new_source} already mapped", witness=None)
    rho = p.prefix.rho
    images = {t for _, t in p.pairs}
    for candidate in range(p.prefix.m):
        if candidate in images:
            continue
        if all(rho[new_source][s] == rho[candidate][t] for s, t in p.pairs):
            return PartialIsometry(p.prefix, p.pairs + ((new_source, candidate),))
    return None
