"""Rational scalar backend.

The exact rational type ``Q`` is ``gmpy2.mpq`` when gmpy2 is importable (a C
implementation, roughly an order of magnitude faster on the small-integer
workloads this package runs) and ``fractions.Fraction`` otherwise.  Setting
``NILGEO_BACKEND=python`` forces the pure-Python fallback.

Both types reduce to lowest terms, keep a positive denominator, compare
exactly against ``int`` and hash identically, so the rest of the package never
needs to know which one it is using.
"""

from __future__ import annotations

import os
import re
from fractions import Fraction

BACKEND = "python"
Q = Fraction

if os.environ.get("NILGEO_BACKEND", "").lower() not in ("python", "pure", "fraction"):
    try:
        from gmpy2 import mpq as _mpq
    except ImportError:  # pragma: no cover - depends on environment
        pass
    else:
        Q = _mpq
        BACKEND = "gmpy2"

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")

ZERO = Q(0)
ONE = Q(1)
HALF = Q(1, 2)
QUARTER = Q(1, 4)
EIGHTH = Q(1, 8)


def to_q(value) -> "Q":
    """Coerce an int, Fraction, mpq or ``"p/q"`` string to the backend type."""
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    if isinstance(value, Fraction) and Q is not Fraction:
        return Q(value.numerator, value.denominator)
    return Q(value)


def parse_rational(text: str) -> "Q":
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Q(num, den)


def fmt_q(value) -> str:
    """Exact string form: ``"-2"``, ``"1/2"``."""
    q = to_q(value)
    num, den = int(q.numerator), int(q.denominator)
    return str(num) if den == 1 else f"{num}/{den}"


def numden(value) -> tuple[int, int]:
    q = to_q(value)
    return int(q.numerator), int(q.denominator)
