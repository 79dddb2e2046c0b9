import random
from fractions import Fraction

import pytest

from ury import (
    DegeneratePath,
    FiniteMetricSpace,
    KatetovFunction,
    NotAdmissible,
    NotAdmissibleOnSubset,
    PathHullCandidate,
    SpaceMismatch,
    TooLarge,
    extend_radius_function,
    extremal_below,
    is_admissible_function,
    is_extremal,
    kuratowski,
    sup_distance,
    tight_span_vertices,
    tripod_center,
    verify_hull_candidate,
)
from helpers import oracle_is_extremal, rand_rational, random_metric_space, random_tripod_space

T345 = FiniteMetricSpace.from_lower_triangle([[3], [4, 5]])
PATH = FiniteMetricSpace.from_lower_triangle([[1], [2, 1]])
TWO = FiniteMetricSpace.from_lower_triangle([[1]])
ONE = FiniteMetricSpace([[0]])
STEP = Fraction(1, 64)
A_PAIR = [("0", "0"), ("0", "1")]


def test_kuratowski_is_admissible():
    rng = random.Random(41)
    for _ in range(20):
        space = random_metric_space(rng, rng.randint(1, 6))
        for a in space.points():
            ok, _ = is_admissible_function(kuratowski(space, a))
            assert ok


def test_admissible_examples():
    assert is_admissible_function(KatetovFunction(T345, [1, 2, 3])) == (True, None)
    assert is_admissible_function(KatetovFunction(TWO, [0, 0])) == (False, (0, 1))


def test_extremal_examples():
    assert is_extremal(KatetovFunction(TWO, [0, 1]))
    assert is_extremal(KatetovFunction(T345, [1, 2, 3]))
    assert not is_extremal(KatetovFunction(TWO, [1, 1]))
    assert not is_extremal(KatetovFunction(TWO, [0, 0]))  # inadmissible


def test_extremal_oracle_agreement():
    rng = random.Random(43)
    agree = {True: 0, False: 0}
    for _ in range(500):
        space = random_metric_space(rng, rng.randint(1, 5))
        style = rng.random()
        if style < 0.35:
            values = [rand_rational(rng, Fraction(0), Fraction(3)) for _ in space.points()]
        elif style < 0.6:
            values = list(kuratowski(space, rng.randrange(space.n)).values)
            if rng.random() < 0.5 and space.n > 1:
                values[rng.randrange(space.n)] += rand_rational(rng, Fraction(0), Fraction(1))
        else:
            seed = [rand_rational(rng, Fraction(2), Fraction(4)) for _ in space.points()]
            values = list(extremal_below(KatetovFunction(space, seed)).values)
            if rng.random() < 0.4:
                values[rng.randrange(space.n)] += Fraction(1, 3)
        f = KatetovFunction(space, values)
        expected = oracle_is_extremal(f)
        assert is_extremal(f) == expected
        agree[expected] += 1
    assert min(agree.values()) > 100


def test_descent_two_point():
    f = extremal_below(KatetovFunction(TWO, [1, 1]))
    assert f.values == (0, 1)


def test_descent_idempotent_on_extremal():
    g = KatetovFunction(T345, [1, 2, 3])
    assert extremal_below(g).values == g.values


def test_descent_345():
    g = KatetovFunction(T345, [3, 3, 3])
    f = extremal_below(g)
    assert all(a <= b for a, b in zip(f.values, g.values))
    assert is_extremal(f) and oracle_is_extremal(f)


def test_descent_rejects_inadmissible():
    with pytest.raises(NotAdmissible):
        extremal_below(KatetovFunction(TWO, [0, Fraction(1, 2)]))


def test_descent_outputs_extremal_and_lipschitz():
    rng = random.Random(47)
    for _ in range(120):
        space = random_metric_space(rng, rng.randint(1, 5))
        base = max(space.matrix[i][j] for i in space.points() for j in space.points())
        g = KatetovFunction(
            space, [base + rand_rational(rng, Fraction(0), Fraction(2)) for _ in space.points()]
        )
        f = extremal_below(g)
        assert all(fv <= gv for fv, gv in zip(f.values, g.values))
        assert oracle_is_extremal(f)
        assert extremal_below(f).values == f.values
        for x in space.points():
            for y in space.points():
                assert abs(f.values[x] - f.values[y]) <= space.distance(x, y)


def test_kuratowski_values():
    assert kuratowski(T345, 0).values == (0, 3, 4)
    assert kuratowski(TWO, 0).values == (0, 1)
    rng = random.Random(53)
    for _ in range(30):
        space = random_metric_space(rng, rng.randint(1, 8))
        for a in space.points():
            f = kuratowski(space, a)
            assert f.values[a] == 0
            assert is_extremal(f)


def test_kuratowski_isometry():
    rng = random.Random(59)
    for _ in range(60):
        space = random_metric_space(rng, rng.randint(1, 8))
        for a in space.points():
            for b in space.points():
                assert sup_distance(kuratowski(space, a), kuratowski(space, b)) == space.distance(a, b)


def test_sup_distance_examples():
    f = KatetovFunction(TWO, [0, 1])
    g = KatetovFunction(TWO, [1, 0])
    assert sup_distance(f, f) == 0
    assert sup_distance(f, g) == 1


def test_sup_distance_space_mismatch():
    with pytest.raises(SpaceMismatch):
        sup_distance(KatetovFunction(TWO, [0, 1]), KatetovFunction(T345, [0, 3, 4]))


# ---------------------------------------------------------------------------
# Radius extension
# ---------------------------------------------------------------------------

def test_extend_radius_full_subset_is_identity():
    r = [Fraction(2), Fraction(3), Fraction(4)]
    f = extend_radius_function(T345, [0, 1, 2], r)
    assert list(f.values) == r


def test_extend_radius_path_space():
    f = extend_radius_function(PATH, [0, 2], [1, 1])
    assert f.values == (1, 2, 1)


def test_extend_radius_single_point_is_shifted_kuratowski():
    f = extend_radius_function(T345, [0], [1])
    expected = [1 + v for v in kuratowski(T345, 0).values]
    expected[0] = Fraction(1)
    assert list(f.values) == expected


def test_extend_radius_rejects_inadmissible_subset():
    with pytest.raises(NotAdmissibleOnSubset) as exc:
        extend_radius_function(PATH, [0, 2], [Fraction(1, 2), Fraction(1, 2)])
    assert exc.value.pair == (0, 1)


def test_extend_radius_is_admissible_everywhere():
    rng = random.Random(61)
    for _ in range(80):
        space = random_metric_space(rng, rng.randint(2, 7))
        k = rng.randint(1, space.n)
        subset = rng.sample(range(space.n), k)
        dmax = max(space.matrix[i][j] for i in space.points() for j in space.points())
        r = [dmax / 2 + rand_rational(rng, Fraction(0), Fraction(1)) for _ in subset]
        f = extend_radius_function(space, subset, r)
        ok, _ = is_admissible_function(f)
        assert ok
        for a, rv in zip(subset, r):
            assert f.values[a] == rv


# ---------------------------------------------------------------------------
# Vertex enumeration
# ---------------------------------------------------------------------------

def test_vertices_one_point():
    result = tight_span_vertices(ONE)
    assert [f.values for f in result.vertices] == [(0,)]


def test_vertices_two_point():
    result = tight_span_vertices(TWO)
    assert [f.values for f in result.vertices] == [(0, 1), (1, 0)]


def test_vertices_345():
    result = tight_span_vertices(T345)
    assert [f.values for f in result.vertices] == [
        (0, 3, 4),
        (1, 2, 3),
        (3, 0, 5),
        (4, 5, 0),
    ]


def test_vertices_random_tripods():
    rng = random.Random(67)
    for _ in range(80):
        space, legs = random_tripod_space(rng)
        result = tight_span_vertices(space)
        values = [f.values for f in result.vertices]
        assert len(values) == 4
        assert tuple(legs) in values
        assert tripod_center(space).values == tuple(legs)
        for a in range(3):
            assert kuratowski(space, a).values in values


def test_degenerate_tripod_center_merges_with_leaf():
    result = tight_span_vertices(PATH)
    values = [f.values for f in result.vertices]
    assert len(values) == 3  # center (1,0,1) equals the middle Kuratowski leaf
    assert tripod_center(PATH).values == (1, 0, 1)
    assert (1, 0, 1) in values


def test_vertices_properties_four_to_six_points():
    rng = random.Random(71)
    for n in (4, 5, 6):
        space = random_metric_space(rng, n)
        result = tight_span_vertices(space)
        values = [f.values for f in result.vertices]
        assert values == sorted(set(values))
        for f in result.vertices:
            assert is_extremal(f) and oracle_is_extremal(f)
            for x in space.points():
                for y in space.points():
                    assert abs(f.values[x] - f.values[y]) <= space.distance(x, y)
        for a in space.points():
            assert kuratowski(space, a).values in values


def test_vertices_too_large():
    rng = random.Random(73)
    with pytest.raises(TooLarge):
        tight_span_vertices(random_metric_space(rng, 7))


# ---------------------------------------------------------------------------
# Hull candidates
# ---------------------------------------------------------------------------

def test_hull_h1_passes():
    candidate = PathHullCandidate([("0", "0"), ("1", "1")], A_PAIR)
    report = verify_hull_candidate(candidate, STEP)
    assert report.ok and report.endpoint_ok and report.isometry_ok
    assert report.total_length == 1
    assert report.sample_count == 65


def test_hull_h2_passes():
    candidate = PathHullCandidate([("0", "0"), ("1/2", "1/2"), ("1", "0")], A_PAIR)
    report = verify_hull_candidate(candidate, STEP)
    assert report.ok


def test_hull_straight_segment_passes():
    candidate = PathHullCandidate([("0", "0"), ("0", "1")], A_PAIR)
    assert verify_hull_candidate(candidate, STEP).ok


def test_hull_backtracking_fails_isometry():
    candidate = PathHullCandidate([("0", "0"), ("2", "0"), ("0", "0")], A_PAIR)
    report = verify_hull_candidate(candidate, STEP)
    assert not report.ok
    assert not report.isometry_ok
    v = report.first_violation
    assert v is not None and v.actual != v.expected


def test_hull_endpoint_mismatch():
    candidate = PathHullCandidate([("0", "0"), ("1/2", "1/2")], A_PAIR)
    report = verify_hull_candidate(candidate, STEP)
    assert report.isometry_ok and not report.endpoint_ok and not report.ok
    assert report.endpoint_distance == Fraction(1, 2)
    assert report.reference_distance == 1


def test_hull_diagonal_corner_is_a_geodesic():
    # Bends at slope <= 45 degrees stay geodesic under the max norm: this
    # corner path is yet another valid hull of a distance-2 pair.
    candidate = PathHullCandidate([("0", "0"), ("1", "1"), ("0", "2")], [("0", "0"), ("0", "2")])
    assert verify_hull_candidate(candidate, STEP).ok


def test_hull_axis_aligned_corner_fails_isometry():
    # An axis-aligned L-path is not a max-norm geodesic: its endpoints sit
    # at distance 1 while the arclength parameters differ by 2.
    candidate = PathHullCandidate([("0", "0"), ("1", "0"), ("1", "1")], A_PAIR)
    report = verify_hull_candidate(candidate, STEP)
    assert report.endpoint_ok
    assert not report.isometry_ok and not report.ok


def test_hull_degenerate_paths():
    with pytest.raises(DegeneratePath):
        verify_hull_candidate(PathHullCandidate([("0", "0")], A_PAIR), STEP)
    with pytest.raises(DegeneratePath):
        verify_hull_candidate(
            PathHullCandidate([("0", "0"), ("0", "0"), ("1", "1")], A_PAIR), STEP
        )


def test_hull_step_must_divide_one():
    candidate = PathHullCandidate([("0", "0"), ("1", "1")], A_PAIR)
    with pytest.raises(ValueError):
        verify_hull_candidate(candidate, Fraction(2, 3))
    with pytest.raises(ValueError):
        verify_hull_candidate(candidate, Fraction(0))
