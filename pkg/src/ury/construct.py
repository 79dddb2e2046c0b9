"""Step-by-step construction of the rational Urysohn prefix space.

The construction enumerates all nonempty finite sets of positive rationals
and grows a metric space one point at a time.  The enumeration labels
singleton sets with the naturals not divisible by 4 and, for each p >= 2,
labels the p-element sets with the naturals whose 2-adic valuation is
exactly p.  Within each cardinality class the order is fixed here by:

* the Calkin-Wilf breadth-first sequence 1, 1/2, 2, 1/3, 3/2, 2/3, 3, ...
  as the canonical bijection between positive integers and positive
  rationals, and
* the combinatorial number system (colex rank) on strictly increasing
  tuples of Calkin-Wilf indices for p-element sets.

Together these give a computable bijection between positive integers and
all finite sets of distinct positive rationals.

Growth rule: with points ``a_1..a_n`` built and label set
``(r_1, ..., r_p)`` at step ``n`` (``p <= n``), the label is *correctly
defined* when every pair ``i,k <= p`` satisfies

    |r_i - r_k| <= rho(a_i, a_k) <= r_i + r_k.

If so (Case 2) the new point gets ``rho(a_{n+1}, a_j) =
min_{l <= p} (rho(a_j, a_l) + r_l)``; otherwise (Case 1) every distance to
the new point equals a running maximum, whose scope is configurable: the
default ``all-prior`` takes the maximum over all existing pairs, while
``labels-only`` restricts to pairs among the first ``p`` points.  The
``legacy-multiset`` duplicate mode keeps repeated elements of an explicit
override set instead of collapsing them; that reproduces the classical
pitfall where a two-element reading of ``{r, r}`` forces Case 1 and breaks
the triangle inequality (see ``demos/02_urysohn_prefix.py``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import InvalidMode, ParseError, PrefixTooShort
from .rational import as_rational, format_rational

ENUMERATION_VERSION = "cw1"

SET_COLLAPSE = "set-collapse"
LEGACY_MULTISET = "legacy-multiset"
ALL_PRIOR = "all-prior"
LABELS_ONLY = "labels-only"


# ---------------------------------------------------------------------------
# Enumeration: Calkin-Wilf order and the combinatorial number system
# ---------------------------------------------------------------------------

def calkin_wilf(i: int) -> Fraction:
    """The i-th positive rational (i >= 1) in Calkin-Wilf breadth-first order.

    The binary expansion of ``i`` below its leading bit is the root-to-node
    path in the Calkin-Wilf tree: 0 descends to a/(a+b), 1 to (a+b)/b.
    """
    if i < 1:
        raise ValueError("Calkin-Wilf indices start at 1")
    a, b = 1, 1
    for bit in bin(i)[3:]:
        if bit == "0":
            b = a + b
        else:
            a = a + b
    return Fraction(a, b)


def calkin_wilf_index(q) -> int:
    """Position of a positive rational in the Calkin-Wilf order (inverse of
    :func:`calkin_wilf`)."""
    q = as_rational(q)
    if q <= 0:
        raise ValueError(f"Calkin-Wilf order covers positive rationals only, got {q}")
    a, b = q.numerator, q.denominator
    bits = []
    while (a, b) != (1, 1):
        if a > b:
            bits.append("1")
            a -= b
        else:
            bits.append("0")
            b -= a
    return int("1" + "".join(reversed(bits)), 2)


def colex_rank(indices: Sequence[int]) -> int:
    """Colex rank of a strictly increasing tuple of positive integers."""
    rank = 0
    prev = 0
    for pos, c in enumerate(indices, start=1):
        if c <= prev:
            raise ValueError("indices must be strictly increasing and positive")
        rank += comb(c - 1, pos)
        prev = c
    return rank


def colex_unrank(rank: int, p: int) -> tuple[int, ...]:
    """The rank-th (0-based) strictly increasing p-tuple of positive
    integers in colex order; inverse of :func:`colex_rank`."""
    if rank < 0 or p < 1:
        raise ValueError("rank must be >= 0 and p >= 1")
    out = []
    r = rank
    for size in range(p, 0, -1):
        c = size
        while comb(c, size) <= r:
            c += 1
        out.append(c)
        r -= comb(c - 1, size)
    out.reverse()
    return tuple(out)


def cardinality_of_index(n: int) -> int:
    """Cardinality of the n-th label set: 1 unless 4 | n, else the 2-adic
    valuation of n."""
    if n < 1:
        raise ValueError("indices start at 1")
    if n % 4:
        return 1
    return (n & -n).bit_length() - 1


@dataclass(frozen=True)
class QLabel:
    """A label in the enumeration: an index and its set of positive rationals.

    ``elements`` is nondecreasing; for canonical labels it is strictly
    increasing (sets have no repeats).  ``index`` is the position in the
    canonical enumeration, or the step ordinal when the label comes from an
    explicit override sequence.
    """

    index: int
    elements: tuple[Fraction, ...]

    @property
    def cardinality(self) -> int:
        return len(self.elements)


def subset_of_index(n: int) -> QLabel:
    """The n-th finite set of distinct positive rationals.

    Bijective: every such set has exactly one index (see
    :func:`index_of_subset`).
    """
    p = cardinality_of_index(n)
    if p == 1:
        position = 3 * (n // 4) + (n % 4) - 1
        elements = (calkin_wilf(position + 1),)
    else:
        position = ((n >> p) - 1) // 2
        cw_indices = colex_unrank(position, p)
        elements = tuple(sorted(calkin_wilf(c) for c in cw_indices))
    return QLabel(index=n, elements=elements)


def index_of_subset(elements: Iterable) -> int:
    """Index of a finite set of distinct positive rationals (inverse of
    :func:`subset_of_index`)."""
    values = sorted(as_rational(v) for v in elements)
    if not values:
        raise ValueError("the empty set is not enumerated")
    if any(v <= 0 for v in values):
        raise ValueError("elements must be positive")
    if len(set(values)) != len(values):
        raise ValueError("elements must be distinct")
    p = len(values)
    if p == 1:
        position = calkin_wilf_index(values[0]) - 1
        return 4 * (position // 3) + position % 3 + 1
    rank = colex_rank(sorted(calkin_wilf_index(v) for v in values))
    return (2 * rank + 1) << p


# ---------------------------------------------------------------------------
# Construction state and modes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConstructionMode:
    """Settings for :func:`build_prefix`.

    ``q_override`` replaces the canonical enumeration for the first
    ``len(q_override)`` steps; later steps fall back to the canonical label
    of the same index.  ``legacy-multiset`` duplicate handling is only
    meaningful for explicit overrides and is rejected without one.
    """

    duplicate_handling: str = SET_COLLAPSE
    case1_scope: str = ALL_PRIOR
    q_override: tuple[tuple[Fraction, ...], ...] | None = None

    def __post_init__(self):
        if self.duplicate_handling not in (SET_COLLAPSE, LEGACY_MULTISET):
            raise InvalidMode(f"unknown duplicate handling {self.duplicate_handling!r}")
        if self.case1_scope not in (ALL_PRIOR, LABELS_ONLY):
            raise InvalidMode(f"unknown case-1 scope {self.case1_scope!r}")
        if self.q_override is not None:
            canon = tuple(
                self._canonical_elements(entry) for entry in self.q_override
            )
            object.__setattr__(self, "q_override", canon)
        elif self.duplicate_handling == LEGACY_MULTISET:
            raise InvalidMode("legacy-multiset requires an explicit q_override")

    def _canonical_elements(self, entry) -> tuple[Fraction, ...]:
        values = [as_rational(v) for v in entry]
        if not values:
            raise ValueError("override label sets must be nonempty")
        if any(v <= 0 for v in values):
            raise ValueError("override label elements must be positive")
        if self.duplicate_handling == SET_COLLAPSE:
            values = sorted(set(values))
        else:
            values = sorted(values)
        return tuple(values)

    @property
    def tag(self) -> str:
        enum = "override" if self.q_override is not None else ENUMERATION_VERSION
        return f"{self.duplicate_handling},{self.case1_scope},{enum}"

    def label_for_step(self, step: int) -> QLabel:
        if self.q_override is not None and step <= len(self.q_override):
            return QLabel(index=step, elements=self.q_override[step - 1])
        return subset_of_index(step)


DEFAULT_MODE = ConstructionMode()


@dataclass(frozen=True)
class StepRecord:
    step: int
    label: QLabel
    correctly_defined: bool


@dataclass(frozen=True)
class PrefixState:
    """A built prefix: m points, their exact distance matrix, and the log.

    ``rho`` restricted to the first k points equals the k-point prefix for
    every k (incrementality).  In ``set-collapse`` mode the matrix is always
    a valid metric; ``legacy-multiset`` overrides can break it by design.
    """

    m: int
    rho: tuple[tuple[Fraction, ...], ...]
    log: tuple[StepRecord, ...] = field(repr=False)
    mode_tag: str = DEFAULT_MODE.tag

    def distance(self, i: int, j: int) -> Fraction:
        return self.rho[i][j]


def _eq1_first_failure(
    rho: Sequence[Sequence[Fraction]], elements: Sequence[Fraction]
) -> tuple[int, int] | None:
    """First pair (i, k), i < k, violating |r_i - r_k| <= rho <= r_i + r_k."""
    p = len(elements)
    for i in range(p):
        for k in range(i + 1, p):
            d = rho[i][k]
            lo = abs(elements[i] - elements[k])
            if d < lo or d > elements[i] + elements[k]:
                return (i, k)
    return None


def is_correctly_defined(prefix: PrefixState, label) -> tuple[bool, tuple[int, int] | None]:
    """Test the two-sided correctness condition of a label against a prefix.

    ``label`` may be a :class:`QLabel` or a plain sequence of rationals.
    Returns ``(True, None)`` or ``(False, (i, k))`` with the lexicographically
    first violating pair of element positions (0-based).
    """
    elements = label.elements if isinstance(label, QLabel) else tuple(
        as_rational(v) for v in label
    )
    if len(elements) > prefix.m:
        raise PrefixTooShort(
            f"label has {len(elements)} elements but the prefix has {prefix.m} points"
        )
    failure = _eq1_first_failure(prefix.rho, elements)
    return (failure is None, failure)


def build_prefix(
    m: int,
    mode: ConstructionMode = DEFAULT_MODE,
    resume: PrefixState | None = None,
) -> PrefixState:
    """Build the m-point prefix deterministically under ``mode``.

    ``resume`` may supply a previously built (possibly cached) state; it must
    have been produced under the same mode and enumeration, otherwise
    :class:`InvalidMode` is raised — a cache is never silently reused across
    settings.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if mode.duplicate_handling == LEGACY_MULTISET and mode.q_override is None:
        raise InvalidMode("legacy-multiset requires an explicit q_override")

    rows: list[list[Fraction]] = [[Fraction(0)]]
    log: list[StepRecord] = []
    if resume is not None:
        if resume.mode_tag != mode.tag:
            raise InvalidMode(
                f"cached prefix was built as {resume.mode_tag!r}, requested {mode.tag!r}"
            )
        for rec in resume.log:
            if rec.label != mode.label_for_step(rec.step):
                raise InvalidMode(
                    f"cached step {rec.step} used a different label; refusing to resume"
                )
        if resume.m >= m:
            return truncate_prefix(resume, m)
        rows = [list(row) for row in resume.rho]
        log = list(resume.log)

    running_max = max((v for row in rows for v in row), default=Fraction(0))
    for step in range(len(rows), m):
        label = mode.label_for_step(step)
        p = label.cardinality
        if p > step:
            raise PrefixTooShort(
                f"step {step}: label needs {p} points but only {step} exist"
            )
        failure = _eq1_first_failure(rows, label.elements)
        if failure is None:
            new_row = [
                min(rows[j][lam] + label.elements[lam] for lam in range(p))
                for j in range(step)
            ]
        elif mode.case1_scope == ALL_PRIOR:
            new_row = [running_max] * step
        else:
            pairs = [rows[i][k] for i in range(p) for k in range(i + 1, p)]
            new_row = [max(pairs)] * step

        for j, dist in enumerate(new_row):
            rows[j].append(dist)
        rows.append(new_row + [Fraction(0)])
        running_max = max(running_max, max(new_row))
        log.append(StepRecord(step=step, label=label, correctly_defined=failure is None))

    return PrefixState(
        m=m,
        rho=tuple(tuple(row) for row in rows),
        log=tuple(log),
        mode_tag=mode.tag,
    )


def truncate_prefix(state: PrefixState, m: int) -> PrefixState:
    """The first-m-points prefix of ``state`` (exact, by incrementality)."""
    if not 1 <= m <= state.m:
        raise ValueError(f"cannot truncate a {state.m}-point prefix to {m}")
    if m == state.m:
        return state
    return PrefixState(
        m=m,
        rho=tuple(row[:m] for row in state.rho[:m]),
        log=state.log[: m - 1],
        mode_tag=state.mode_tag,
    )


# ---------------------------------------------------------------------------
# Cache file format: header "URY0 v1 <mode-tag>" then one record per step
# ---------------------------------------------------------------------------

_CACHE_MAGIC = "URY0 v1"


def dump_prefix_text(state: PrefixState) -> str:
    """Render a prefix as cache text, bit-exactly reloadable."""
    lines = [f"{_CACHE_MAGIC} {state.mode_tag}"]
    for rec in state.log:
        elements = " ".join(format_rational(r) for r in rec.label.elements)
        flag = "C" if rec.correctly_defined else "I"
        row = " ".join(format_rational(v) for v in state.rho[rec.step][: rec.step])
        lines.append(f"{rec.step} | {elements} | {flag} | {row}")
    return "\n".join(lines) + "\n"


def load_prefix_text(text: str) -> PrefixState:
    """Parse cache text back into the identical in-memory state."""
    lines = text.splitlines()
    if not lines or not lines[0].startswith(_CACHE_MAGIC + " "):
        raise ParseError(1, 1, f"missing {_CACHE_MAGIC!r} header")
    mode_tag = lines[0][len(_CACHE_MAGIC) + 1 :]
    if not mode_tag or " " in mode_tag:
        raise ParseError(1, len(_CACHE_MAGIC) + 2, "malformed mode tag")

    rows: list[list[Fraction]] = [[Fraction(0)]]
    log: list[StepRecord] = []
    for lineno, line in enumerate(lines[1:], start=2):
        parts = line.split(" | ")
        if len(parts) != 4:
            raise ParseError(lineno, 1, "expected 'n | elements | C/I | row'")
        step_text, elements_text, flag, row_text = parts
        if not step_text.isdigit() or int(step_text) != lineno - 1:
            raise ParseError(lineno, 1, f"expected step {lineno - 1}, got {step_text!r}")
        step = int(step_text)
        if flag not in ("C", "I"):
            raise ParseError(lineno, 1, f"flag must be C or I, got {flag!r}")
        try:
            elements = tuple(as_rational(t) for t in elements_text.split(" "))
            row = tuple(as_rational(t) for t in row_text.split(" "))
        except ValueError as exc:
            raise ParseError(lineno, 1, str(exc)) from None
        if len(row) != step:
            raise ParseError(lineno, 1, f"row has {len(row)} entries, expected {step}")
        for j, dist in enumerate(row):
            rows[j].append(dist)
        rows.append(list(row) + [Fraction(0)])
        log.append(
            StepRecord(
                step=step,
                label=QLabel(index=step, elements=elements),
                correctly_defined=flag == "C",
            )
        )

    return PrefixState(
        m=len(rows),
        rho=tuple(tuple(row) for row in rows),
        log=tuple(log),
        mode_tag=mode_tag,
    )


def save_prefix(state: PrefixState, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dump_prefix_text(state))


def load_prefix(path) -> PrefixState:
    with open(path, "r", encoding="utf-8") as fh:
        return load_prefix_text(fh.read())
