"""Exact rational scalars and their canonical text form.

The library computes with :class:`fractions.Fraction` only; no floating
point value ever enters a computation.  The canonical text rendering is
``p/q`` in lowest terms with ``q > 0``, or a bare ``p`` when ``q == 1`` —
the form ``str(Fraction)`` already produces.  Parsing is deliberately
strict: decimal and exponent notation are rejected, never converted.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"(-?)([0-9]+)(?:/([0-9]+))?")


def parse_rational(text: str) -> Fraction:
    """Parse a canonical-style rational literal (``p`` or ``p/q``).

    Raises ValueError for anything else, including decimal notation.
    Non-canonical but unambiguous forms such as ``2/4`` are accepted and
    normalised.
    """
    m = _RATIONAL_RE.fullmatch(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    sign, num, den = m.groups()
    if den is None:
        value = Fraction(int(num))
    else:
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        value = Fraction(int(num), int(den))
    return -value if sign else value


def format_rational(q: Fraction) -> str:
    """Render ``q`` canonically: lowest terms, positive denominator."""
    return str(q)


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions, and strict literals to Fraction.

    Floats are rejected outright: silently converting one would smuggle
    binary rounding into an exact computation.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError(
            f"floating point input {value!r} is not allowed; pass an exact rational"
        )
    raise TypeError(f"cannot interpret {type(value).__name__} as a rational")
