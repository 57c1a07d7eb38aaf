"""Exact rational building blocks: reduced denominators, lcm ranges, harmonic sums.

Everything in this module is integer or `fractions.Fraction` arithmetic.
`Fraction` already keeps values in lowest terms with a positive denominator,
which is exactly the normal form the rest of the package relies on, so it is
re-exported here as the package-wide `Rational` type.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm

Rational = Fraction

__all__ = ["Rational", "reduced_denominator", "lcm_range", "harmonic"]


def reduced_denominator(x: Rational | int) -> int:
    """Positive denominator of x in lowest terms; 1 for x = 0."""
    return Fraction(x).denominator


@lru_cache(maxsize=None)
def lcm_range(n: int) -> int:
    """lcm(1, 2, ..., n).

    Incremental pairwise lcm; fine at the scale this package works at.
    """
    if n < 1:
        raise ValueError(f"lcm_range requires n >= 1, got {n}")
    out = 1
    for k in range(2, n + 1):
        out = lcm(out, k)
    return out


@lru_cache(maxsize=None)
def harmonic(m: int, x: int) -> Fraction:
    """Generalized harmonic number: sum of 1/k**m for k = 1..x.

    The empty sum (x = 0) is 0. Exact, no rounding.
    """
    if m < 1:
        raise ValueError(f"harmonic order must be >= 1, got {m}")
    if x < 0:
        raise ValueError(f"harmonic argument must be >= 0, got {x}")
    total = Fraction(0)
    for k in range(1, x + 1):
        total += Fraction(1, k**m)
    return total
