"""Searching a prefix for exact isometric copies of small spaces.

Universality of the full space is a limit statement; at desk scale we can
still gather evidence: backtracking search either produces an exact
isometric embedding of a target into a built prefix, or certifies that no
copy exists within the searched length.  Likewise, distance-preserving
pairings between prefix points extend one source at a time where the
prefix allows it.
"""

from ury import (
    FiniteMetricSpace,
    PartialIsometry,
    build_prefix,
    extend_partial_isometry,
    find_isometric_embedding,
    truncate_prefix,
)

prefix = build_prefix(200)

# A 2-point space at distance 1 embeds immediately.
two = FiniteMetricSpace.from_lower_triangle([[1]])
result = find_isometric_embedding(two, prefix)
print("distance-1 pair:", result.status, "->", [m + 1 for m in result.mapping])

# Distance 7 does not appear among the first three points; the negative
# answer carries the searched length and says nothing beyond it.
seven = FiniteMetricSpace.from_lower_triangle([[7]])
short = find_isometric_embedding(seven, truncate_prefix(prefix, 3))
print("distance-7 pair in 3 points:", short.status, f"(searched {short.searched_prefix_length})")
longer = find_isometric_embedding(seven, prefix)
print("distance-7 pair in 200 points:", longer.status,
      "->", [m + 1 for m in longer.mapping] if longer.mapping else None)

# The equilateral rational triangle with side 3/2.
equilateral = FiniteMetricSpace.from_lower_triangle([["3/2"], ["3/2", "3/2"]])
found = find_isometric_embedding(equilateral, prefix)
print("equilateral 3/2 triangle:", found.status,
      "->", [m + 1 for m in found.mapping] if found.mapping else None)

# Any found mapping realizes every pairwise distance exactly.
if found.mapping:
    m = found.mapping
    for i in range(3):
        for j in range(i + 1, 3):
            assert equilateral.distance(i, j) == prefix.rho[m[i]][m[j]]

# Partial isometries: map two early points onto each other (the swap
# preserves their distance) and ask for an image of a third source.
swap = PartialIsometry(prefix, [(0, 1), (1, 0)])
extended = extend_partial_isometry(swap, 2)
if extended is None:
    print("swap pairing: no compatible image for source 3 in this prefix")
else:
    s, t = extended.pairs[-1]
    print(f"swap pairing extends: source {s + 1} -> image {t + 1}")

# Identity pairings always extend identically.
identity = PartialIsometry(prefix, [(0, 0), (1, 1), (2, 2)])
print("identity extends source 4 to image",
      extend_partial_isometry(identity, 3).pairs[-1][1] + 1)
