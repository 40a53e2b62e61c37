"""Small shared helpers for the test suite."""

from __future__ import annotations

from bicmaps.series import MSeries, first_difference


def S(num_vars, order, terms, reliable=None):
    """Build a series from an {exponents: coefficient} dict (ints allowed)."""
    return MSeries(num_vars, order, terms, reliable)


def assert_series(actual, expected, through=None, label=""):
    diff = first_difference(actual, expected, through)
    if diff is not None:
        e, ca, ce = diff
        raise AssertionError(
            f"{label or 'series'} differ at exponent {e}: got {ca}, expected {ce}\n"
            f"actual:   {actual}\nexpected: {expected}"
        )

