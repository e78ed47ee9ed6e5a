"""Exact rational helpers.

Two operations drive the index-set constructions: ``phi``, the least
integer strictly above r*t, and the smallest-denominator fraction inside
a half-open interval (lo, hi].
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import EmptyInterval


def phi(r: Fraction | int, t: int) -> int:
    """Least integer strictly greater than r*t.

    Equals r*t + 1 when r*t is an integer and ceil(r*t) otherwise, so
    phi(r, 0) = 1 for every r.
    """
    if t < 0:
        raise ValueError("t must be non-negative")
    rt = Fraction(r) * t
    if rt < 0:
        raise ValueError("r must be non-negative")
    if rt.denominator == 1:
        return rt.numerator + 1
    return math.ceil(rt)


def min_fraction_by_scan(lo: Fraction, hi: Fraction) -> Fraction:
    """Reference implementation of ``min_fraction_in_interval``.

    Scans denominators f = 1, 2, ... and returns the first e/f with
    lo < e/f <= hi.  Linear in the answer's denominator; used as the
    property-test oracle for the fast path.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    _check_interval(lo, hi)
    for f in range(1, hi.denominator + 1):
        e = phi(lo, f)
        if Fraction(e, f) <= hi:
            return Fraction(e, f)
    raise AssertionError("unreachable: hi itself has a valid denominator")


def min_fraction_in_interval(lo: Fraction, hi: Fraction) -> Fraction:
    """Fraction e/f with lo < e/f <= hi, denominator minimal, then numerator.

    Stern-Brocot / continued-fraction descent; O(log) in the sizes of the
    endpoints.  For denominators >= 2 the minimizer is unique; for
    denominator 1 the smallest integer in the interval is returned.
    """
    lo, hi = Fraction(lo), Fraction(hi)
    _check_interval(lo, hi)
    return _simplest(lo, True, hi, False)


def _check_interval(lo: Fraction, hi: Fraction) -> None:
    if lo < 0:
        raise EmptyInterval(f"left endpoint must be non-negative, got {lo}")
    if lo >= hi:
        raise EmptyInterval(f"empty interval ({lo}, {hi}]")


def _simplest(lo: Fraction, lo_open: bool, hi: Fraction, hi_open: bool) -> Fraction:
    # smallest integer admissible on the left
    n = lo.numerator // lo.denominator
    c = n if (lo.denominator == 1 and not lo_open) else n + 1
    if c < hi or (c == hi and not hi_open):
        return Fraction(c)
    if lo == n:
        # fractional interval is (0, hi - n >=or> ...): numerator 1 wins,
        # pick the least denominator q with 1/q inside
        recip = 1 / (hi - n)
        if hi_open:
            q = recip.numerator // recip.denominator + 1
        else:
            q = -((-recip.numerator) // recip.denominator)
        return n + Fraction(1, q)
    # no integer inside: recurse on reciprocals of the fractional parts;
    # openness flips sides under x -> 1/x
    return n + 1 / _simplest(1 / (hi - n), hi_open, 1 / (lo - n), lo_open)
