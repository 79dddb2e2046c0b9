"""Exact rational metric spaces and the .dmat text format.

Every distance in this library is an arbitrary-precision rational in
lowest terms; nothing is ever rounded.  A finite metric space is just a
symmetric matrix of such numbers that passes four exactly-checkable axiom
families: zero diagonal, symmetry, positivity, and the triangle
inequality.
"""

from fractions import Fraction

from ury import (
    FiniteMetricSpace,
    MetricViolation,
    parse_distance_matrix,
    serialize_distance_matrix,
    validate_metric,
)

# The 3-4-5 triangle as a metric space.  Lower-triangle rows: d(2,1),
# then d(3,1) d(3,2).
space = FiniteMetricSpace.from_lower_triangle([[3], [4, 5]])
print("3-4-5 triangle as canonical .dmat text:")
print(serialize_distance_matrix(space))

# The format round-trips byte-for-byte.
text = serialize_distance_matrix(space)
assert parse_distance_matrix(text) == space
assert serialize_distance_matrix(parse_distance_matrix(text)) == text

# Fractions render as p/q, integers as bare p.
half_space = FiniteMetricSpace.from_lower_triangle([["1/2"]])
print("2-point space at distance 1/2:")
print(serialize_distance_matrix(half_space))

# Validation reports every broken axiom with an exact witness.  Distances
# (1, 1, 3) cannot form a triangle: 3 > 1 + 1.
report = validate_metric([[0, 1, 1], [1, 0, 3], [1, 3, 0]])
print("axioms ok?", report.ok)
for v in report.violations:
    one_based = tuple(i + 1 for i in v.indices)
    print(f"  {v.kind} at points {one_based}: {v.lhs} > {v.rhs}")

# Constructing a space from a bad matrix raises, carrying the same report.
try:
    FiniteMetricSpace([[0, 1, 1], [1, 0, 3], [1, 3, 0]])
except MetricViolation as exc:
    print("construction rejected:", exc)

# Arithmetic is exact: a fortieth plus a sixtieth is a twenty-fourth.
assert Fraction(1, 40) + Fraction(1, 60) == Fraction(1, 24)
print("exact arithmetic: 1/40 + 1/60 =", Fraction(1, 40) + Fraction(1, 60))
