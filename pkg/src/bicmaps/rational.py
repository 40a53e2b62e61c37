"""Exact rational coefficient type.

Uses gmpy2's mpq when available (an order of magnitude faster on the dense
high-order series this package produces); falls back to the stdlib Fraction.
Both expose ``numerator``/``denominator`` and interoperate with plain ints,
so the rest of the package never needs to know which backend is active.
Set ``BICMAPS_PURE_PYTHON=1`` to force the Fraction backend.
"""

from __future__ import annotations

import numbers
import os
from fractions import Fraction

if os.environ.get("BICMAPS_PURE_PYTHON"):
    Rat = Fraction
    GMPY2_BACKEND = False
else:
    try:
        from gmpy2 import mpq as Rat  # type: ignore[no-redef]

        GMPY2_BACKEND = True
    except ImportError:  # pragma: no cover - mirror always has gmpy2
        Rat = Fraction
        GMPY2_BACKEND = False


def rat(numerator, denominator=None):
    """Build an exact rational from ints, strings, Fractions or Rat values."""
    if denominator is None:
        return Rat(numerator)
    return Rat(numerator, denominator)


def is_rational(x) -> bool:
    """True for anything usable as an exact series coefficient."""
    return isinstance(x, numbers.Rational)
