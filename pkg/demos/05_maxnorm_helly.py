"""Box intersection under the max norm and the null-sequence obstruction.

Closed balls of the max norm are boxes, so intersecting a family reduces
to one interval intersection per coordinate — which is why pairwise
intersection already forces a common point (the Helly property), and why
finite-dimensional max-norm spaces are as convex as a metric space can be.

The same picture shows what goes wrong for null sequences: unit basis
vectors keep pairwise distance 1, their radius-1/2 balls always meet, but
the only common point has every coordinate 1/2 — it never tends to zero.
"""

from ury import Box, box_intersection, c0_counterexample, max_norm_ball

# Two boxes in the plane and their exact intersection.
a = Box([("0", "2"), ("0", "2")])
b = Box([("1", "3"), ("-1", "1")])
result = box_intersection([a, b])
pretty = " x ".join(f"[{lo}, {hi}]" for lo, hi in result.box.intervals)
print("intersection:", pretty, " witness:", tuple(str(v) for v in result.witness))

# Balls around basis vectors at the critical radius meet in one point.
touching = box_intersection(
    [max_norm_ball((1, 0), "1/2"), max_norm_ball((0, 1), "1/2")]
)
print("B(e1,1/2) and B(e2,1/2) meet exactly at:", tuple(str(v) for v in touching.witness))

# An empty intersection names the crossing coordinate.
apart = box_intersection([Box([("0", "1")]), Box([("2", "3")])])
print("disjoint intervals -> empty at coordinate", apart.first_empty_coordinate)

# The truncated null-sequence demonstration, at a few sizes: the witness
# is always the all-1/2 point, so its sup-norm stays 1/2 forever.
for n in (2, 10, 100):
    report = c0_counterexample(n)
    print(
        f"N={n}: pairwise distance {report.pairwise_distance}, "
        f"conclusion {report.conclusion}, smallest witness coordinate "
        f"{report.witness_tail_value}"
    )

# Shrink the radius below 1/2 and the family stops being pairwise
# feasible, so the intersection is empty.
perturbed = c0_counterexample(2, "1/4")
print("radius 1/4:", perturbed.conclusion, "- pairwise feasible?", perturbed.pairwise_feasible)
