"""Exception hierarchy for the ury library.

Every library-raised error derives from :class:`UryError` so callers (and
the CLI) can distinguish domain failures from programming mistakes.
"""

from __future__ import annotations


class UryError(Exception):
    """Base class of all library-specific errors."""


class NonSquareInput(UryError):
    """A distance-matrix input is not square."""


class ParseError(UryError):
    """A structured text input is malformed.

    Carries a 1-based ``line`` and ``column`` of the offending token plus a
    short ``reason``.
    """

    def __init__(self, line: int, column: int, reason: str):
        super().__init__(f"line {line}, column {column}: {reason}")
        self.line = line
        self.column = column
        self.reason = reason


class MetricViolation(UryError):
    """A matrix fails the metric axioms; carries the validation report."""

    def __init__(self, report):
        kinds = sorted({v.kind for v in report.violations})
        super().__init__(
            f"{len(report.violations)} metric axiom violation(s): {', '.join(kinds)}"
        )
        self.report = report


class PrefixTooShort(UryError):
    """A label refers to more points than the prefix currently has."""


class InvalidMode(UryError):
    """A construction mode combination (or cache/mode pairing) is not allowed."""


class EmptySupport(UryError):
    """A one-point extension request has no support points."""


class Inadmissible(UryError):
    """Extension radii violate the two-sided admissibility inequalities.

    ``pair`` holds the offending pair of support positions (0-based) and
    ``side`` is ``"lower"`` (|a_i - a_j| > d) or ``"upper"`` (d > a_i + a_j).
    """

    def __init__(self, pair: tuple[int, int], side: str):
        super().__init__(f"inadmissible radii at support pair {pair} ({side} bound)")
        self.pair = pair
        self.side = side


class PairwiseInfeasible(UryError):
    """Two balls are too far apart to intersect: d(x_i, x_j) > r_i + r_j."""

    def __init__(self, pair: tuple[int, int], lhs, rhs):
        super().__init__(
            f"balls {pair} cannot meet: center distance {lhs} > radius sum {rhs}"
        )
        self.pair = pair
        self.lhs = lhs
        self.rhs = rhs


class EmptyFamily(UryError):
    """A ball family must contain at least one ball."""


class NotAdmissible(UryError):
    """A function violates d(x,y) <= f(x) + f(y) for some pair."""

    def __init__(self, pair: tuple[int, int]):
        super().__init__(f"function is not admissible at pair {pair}")
        self.pair = pair


class SpaceMismatch(UryError):
    """Two functions do not live on the same underlying metric space."""


class NotAdmissibleOnSubset(UryError):
    """Radius data on a subset violates d(x,y) <= r(x) + r(y)."""

    def __init__(self, pair: tuple[int, int]):
        super().__init__(f"radius function is not admissible at subset pair {pair}")
        self.pair = pair


class TooLarge(UryError):
    """Input exceeds the enforced combinatorial size limit."""


class DegeneratePath(UryError):
    """A polyline candidate is degenerate (short or repeating breakpoints)."""


class DimensionMismatch(UryError):
    """Boxes in one family must share a dimension."""


class InvalidPartialIsometry(UryError):
    """A partial isometry violates its invariants; carries a witness pair."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness
