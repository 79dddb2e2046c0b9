"""Finite metric spaces over exact rationals.

Provides metric-axiom validation with exact witnesses, the immutable
:class:`FiniteMetricSpace` value type, and the ``.dmat`` text format
(canonical, byte-stable, shared by the whole toolkit).

``.dmat`` format (UTF-8, LF line endings):

* line 1: the point count ``n`` (a positive integer);
* lines 2..n: row ``i`` (for ``i = 2..n``, 1-based) holding the ``i - 1``
  distances ``d(i,1) .. d(i,i-1)`` as canonical rationals separated by
  single spaces, no trailing spaces.

All indices in the public API are 0-based; external formats render them
1-based (see :mod:`ury.cli`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

import numpy as np

from .errors import MetricViolation, NonSquareInput, ParseError
from .rational import as_rational, format_rational

# Below this size the plain Fraction loop beats array setup; above it the
# matrix is rescaled to integers (and to numpy int64 when it provably fits).
_SCALED_MIN_N = 40
_INT64_LIMIT = 2**62


@dataclass(frozen=True)
class Violation:
    """One broken metric axiom with an exact witness.

    kind is one of ``diagonal``, ``symmetry``, ``positivity``, ``triangle``.
    For triangles the witness indices are ``(a, mid, b)`` meaning
    ``d(a,b) > d(a,mid) + d(mid,b)`` with ``lhs = d(a,b)`` and
    ``rhs = d(a,mid) + d(mid,b)``.
    """

    kind: str
    indices: tuple[int, ...]
    lhs: Fraction
    rhs: Fraction


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]


def _coerce_matrix(matrix) -> list[list[Fraction]]:
    rows = [[as_rational(v) for v in row] for row in matrix]
    n = len(rows)
    if n == 0:
        raise NonSquareInput("matrix has no rows")
    if any(len(row) != n for row in rows):
        raise NonSquareInput(f"matrix is not {n}x{n}")
    return rows


def _triangle_violations(rows: list[list[Fraction]]) -> list[Violation]:
    n = len(rows)
    if n < 3:
        return []
    if n < _SCALED_MIN_N:
        found = _triangle_scan(rows)
    else:
        # Rescale to integers by the common denominator: comparisons turn
        # into plain int arithmetic (and vectorize when int64 cannot wrap).
        scale = lcm(*(v.denominator for row in rows for v in row))
        scaled = [[int(v * scale) for v in row] for row in rows]
        top = max(max(row) for row in scaled)
        if top < _INT64_LIMIT:
            found = _triangle_scan_int64(scaled)
        else:
            found = _triangle_scan(scaled)
    found.sort()
    return [
        Violation("triangle", (a, mid, b), rows[a][b], rows[a][mid] + rows[mid][b])
        for a, b, mid in found
    ]


def _triangle_scan(rows) -> list[tuple[int, int, int]]:
    # Emits (a, b, mid) for every failing d(a,b) <= d(a,mid) + d(mid,b),
    # visiting each unordered triple once.  Works on Fractions and ints.
    n = len(rows)
    found = []
    for i in range(n):
        ri = rows[i]
        for j in range(i + 1, n):
            rj = rows[j]
            dij = ri[j]
            for k in range(j + 1, n):
                dik = ri[k]
                djk = rj[k]
                if dik > dij + djk:
                    found.append((i, k, j))
                if dij > dik + djk:
                    found.append((i, j, k))
                if djk > dij + dik:
                    found.append((j, k, i))
    return found


def _triangle_scan_int64(scaled: list[list[int]]) -> list[tuple[int, int, int]]:
    # Exact integer arithmetic: values are bounded so int64 sums cannot wrap.
    d = np.array(scaled, dtype=np.int64)
    n = d.shape[0]
    found = []
    for mid in range(n):
        excess = d > d[:, mid : mid + 1] + d[mid : mid + 1, :]
        excess[mid, :] = False
        excess[:, mid] = False
        for a, b in np.argwhere(np.triu(excess, k=1)):
            found.append((int(a), int(b), mid))
    return found


def validate_metric(matrix: Sequence[Sequence]) -> ValidationReport:
    """Check the metric axioms exactly, reporting every violation found.

    Axioms are checked in stages — diagonal/symmetry, then positivity, then
    the triangle inequality — and a stage only runs when the previous ones
    hold, so each reported witness is meaningful on its own.  Raises
    :class:`NonSquareInput` for inputs that are not square matrices.
    """
    rows = _coerce_matrix(matrix)
    n = len(rows)

    violations: list[Violation] = []
    zero = Fraction(0)
    for i in range(n):
        if rows[i][i] != 0:
            violations.append(Violation("diagonal", (i,), rows[i][i], zero))
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                violations.append(Violation("symmetry", (i, j), rows[i][j], rows[j][i]))
    if violations:
        return ValidationReport(False, tuple(violations))

    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] <= 0:
                violations.append(Violation("positivity", (i, j), rows[i][j], zero))
    if violations:
        return ValidationReport(False, tuple(violations))

    violations.extend(_triangle_violations(rows))
    return ValidationReport(not violations, tuple(violations))


@dataclass(frozen=True)
class FiniteMetricSpace:
    """An n-point metric space given by its exact distance matrix.

    Construction validates all axioms and raises :class:`MetricViolation`
    otherwise.  Instances are immutable and hashable; two spaces are equal
    iff their matrices are.
    """

    matrix: tuple[tuple[Fraction, ...], ...]

    def __init__(self, matrix):
        rows = _coerce_matrix(matrix)
        report = validate_metric(rows)
        if not report.ok:
            raise MetricViolation(report)
        object.__setattr__(self, "matrix", tuple(tuple(row) for row in rows))

    @property
    def n(self) -> int:
        return len(self.matrix)

    def distance(self, i: int, j: int) -> Fraction:
        return self.matrix[i][j]

    def points(self) -> range:
        return range(self.n)

    @classmethod
    def from_lower_triangle(cls, triangle: Sequence[Sequence]) -> "FiniteMetricSpace":
        """Build a space from rows ``[d(1,0)], [d(2,0), d(2,1)], ...``."""
        return cls(_matrix_from_triangle(triangle))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"FiniteMetricSpace(n={self.n})"


def _matrix_from_triangle(triangle: Sequence[Sequence]) -> list[list[Fraction]]:
    rows = [[as_rational(v) for v in row] for row in triangle]
    n = len(rows) + 1
    for i, row in enumerate(rows):
        if len(row) != i + 1:
            raise NonSquareInput(f"triangle row {i} has {len(row)} entries, wanted {i + 1}")
    matrix = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        for j in range(i):
            matrix[i][j] = matrix[j][i] = rows[i - 1][j]
    return matrix


def parse_matrix_text(text: str) -> list[list[Fraction]]:
    """Parse ``.dmat`` syntax into a raw symmetric matrix, without validating
    the metric axioms (``validate_metric`` handles those separately)."""
    lines = text.splitlines()
    if not lines:
        raise ParseError(1, 1, "empty input")
    head = lines[0]
    if not head.isdigit():
        raise ParseError(1, 1, f"invalid point count {head!r}")
    n = int(head)
    if n < 1:
        raise ParseError(1, 1, "point count must be at least 1")
    if len(lines) > n:
        raise ParseError(n + 1, 1, "unexpected extra line")
    if len(lines) < n:
        raise ParseError(len(lines) + 1, 1, f"expected {n - 1} distance rows, got {len(lines) - 1}")

    matrix = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        line = lines[i]
        lineno = i + 1
        if line != line.rstrip():
            raise ParseError(lineno, len(line.rstrip()) + 1, "trailing whitespace")
        tokens = line.split(" ")
        if tokens != [t for t in tokens if t]:
            raise ParseError(lineno, 1, "empty field (double space?)")
        if len(tokens) != i:
            raise ParseError(lineno, 1, f"expected {i} entries, got {len(tokens)}")
        col = 1
        for j, token in enumerate(tokens):
            if token.startswith("-"):
                raise ParseError(lineno, col, "negative distance")
            try:
                value = as_rational(token)
            except ValueError as exc:
                raise ParseError(lineno, col, str(exc)) from None
            matrix[i][j] = matrix[j][i] = value
            col += len(token) + 1
    return matrix


def parse_distance_matrix(text: str) -> FiniteMetricSpace:
    """Parse and validate a ``.dmat`` document.

    Raises :class:`ParseError` for malformed syntax and
    :class:`MetricViolation` when the parsed matrix is not a metric.
    """
    return FiniteMetricSpace(parse_matrix_text(text))


def serialize_matrix(matrix: Sequence[Sequence[Fraction]]) -> str:
    """Render any square symmetric matrix in ``.dmat`` syntax."""
    n = len(matrix)
    lines = [str(n)]
    for i in range(1, n):
        lines.append(" ".join(format_rational(matrix[i][j]) for j in range(i)))
    return "\n".join(lines) + "\n"


def serialize_distance_matrix(space: FiniteMetricSpace) -> str:
    """Canonical ``.dmat`` text; inverse of :func:`parse_distance_matrix`."""
    return serialize_matrix(space.matrix)
