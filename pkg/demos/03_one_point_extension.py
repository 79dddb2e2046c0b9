"""One-point extensions and sphere-exact ball intersection witnesses.

Pick points x_1..x_k and positive radii a_1..a_k.  Whenever the radii
respect |a_i - a_j| <= d(x_i,x_j) <= a_i + a_j, a new point can be adjoined
at exactly those distances — that is the one-point extension.  Stacked on
top of it: any finite family of closed balls whose centers are pairwise
within radius-sum reach has a common point, and one can even find it on
the sphere of every non-redundant ball.
"""

from fractions import Fraction

from ury import (
    BallFamily,
    ExtensionRequest,
    FiniteMetricSpace,
    Inadmissible,
    admissible,
    ball_intersection_witness,
    extend_one_point,
    reduce_ball_family,
    serialize_distance_matrix,
)

triangle = FiniteMetricSpace.from_lower_triangle([[3], [4, 5]])

# Radii (1, 2, 3) are admissible on the 3-4-5 triangle; adjoin a point at
# exactly those distances.
req = ExtensionRequest(triangle, [0, 1, 2], [1, 2, 3])
print("admissible?", admissible(req).ok)
extended = extend_one_point(req)
print(serialize_distance_matrix(extended))

# Radii (1, 1) across distance 3 are not: 3 > 1 + 1.
far = FiniteMetricSpace.from_lower_triangle([[3]])
try:
    extend_one_point(ExtensionRequest(far, [0, 1], [1, 1]))
except Inadmissible as exc:
    print("rejected:", exc)

# Midpoints always exist: radii (d/2, d/2) pass for every pair.
d = triangle.distance(0, 2)
mid = extend_one_point(ExtensionRequest(triangle, [0, 2], [d / 2, d / 2]))
print(f"midpoint of a pair at distance {d}: both new distances {mid.distance(3, 0)}")

# Ball intersection.  On the path space d(1,2)=1, d(1,3)=2, d(2,3)=1 take
# radii (4, 1, 1).  Ball 1 strictly contains ball 2 (4 > 1 + 1), so it is
# redundant; the witness lands on the spheres of the two survivors.
path = FiniteMetricSpace.from_lower_triangle([[1], [2, 1]])
family = BallFamily(path, [(0, 4), (1, 1), (2, 1)])
trace = reduce_ball_family(family)
print("survivors:", [i + 1 for i in trace.survivors])
for removal in trace.removals:
    print(
        f"  removed ball {removal.removed + 1}: its radius {removal.lhs} exceeds "
        f"{removal.rhs} = distance + radius of ball {removal.dominating + 1}"
    )

result = ball_intersection_witness(family)
for entry in result.certificate:
    relation = "=" if entry.on_sphere else "<="
    print(
        f"  d(witness, center {entry.center + 1}) = {entry.distance} "
        f"{relation} {entry.radius}"
    )

# The two-ball case at exactly touching radii produces an exact midpoint.
two = FiniteMetricSpace.from_lower_triangle([[1]])
touch = ball_intersection_witness(
    BallFamily(two, [(0, Fraction(1, 2)), (1, Fraction(1, 2))])
)
print("touching balls meet at distances",
      touch.space.distance(2, 0), "and", touch.space.distance(2, 1))
