"""Katetov functions, extremal projection, and tight-span vertices.

A nonnegative function f on a metric space is admissible when
d(x,y) <= f(x) + f(y) for every pair — think of f as candidate distances
from a phantom point.  The pointwise-minimal admissible functions
(extremal functions) form the tight span: the smallest "injective" space
the original isometrically embeds into via a -> f_a = d(a, .).
"""

from ury import (
    FiniteMetricSpace,
    KatetovFunction,
    PathHullCandidate,
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

triangle = FiniteMetricSpace.from_lower_triangle([[3], [4, 5]])

# Distance rows are admissible and extremal; the embedding a -> f_a is an
# isometry for the sup-metric.
for a in triangle.points():
    f = kuratowski(triangle, a)
    print(f"f_{a + 1} = {tuple(str(v) for v in f.values)}  extremal: {is_extremal(f)}")
assert sup_distance(kuratowski(triangle, 0), kuratowski(triangle, 1)) == 3

# Any admissible function descends to an extremal one below it.
g = KatetovFunction(triangle, [3, 3, 3])
print("descend (3,3,3):", tuple(str(v) for v in extremal_below(g).values))

# Radius data on a subset extends to the whole space while staying
# admissible: here radii (1, 1) on the endpoints of a path of length 2.
path = FiniteMetricSpace.from_lower_triangle([[1], [2, 1]])
R = extend_radius_function(path, [0, 2], [1, 1])
print("extended radius function:", tuple(str(v) for v in R.values))
assert is_admissible_function(R) == (True, None)

# The tight span of a 3-point space is a tripod: three distance rows plus
# the Steiner center, whose legs have the closed form
# ((d_ab + d_ac - d_bc)/2, ...).
vertices = tight_span_vertices(triangle)
print("tight-span vertices of the 3-4-5 triangle:")
for f in vertices.vertices:
    print("  ", tuple(str(v) for v in f.values))
print("tripod center:", tuple(str(v) for v in tripod_center(triangle).values))

# A two-point space has a segment for its tight span.  Inside the max-norm
# plane that segment can be realized by many different polylines: the
# straight diagonal and a bent path are both exact geodesics, while an
# axis-aligned corner is not.
a_pair = [("0", "0"), ("0", "1")]
for name, breakpoints in [
    ("diagonal", [("0", "0"), ("1", "1")]),
    ("bent", [("0", "0"), ("1/2", "1/2"), ("1", "0")]),
    ("axis-aligned corner", [("0", "0"), ("1", "0"), ("1", "1")]),
]:
    report = verify_hull_candidate(PathHullCandidate(breakpoints, a_pair), "1/64")
    print(f"{name}: segment-isometric {report.isometry_ok}, overall {'PASS' if report.ok else 'FAIL'}")
