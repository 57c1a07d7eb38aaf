"""Independent numeric referees for the closed-form integral values.

The series oracle sums the defining series directly: expanding the geometric
kernel and differentiating term by term gives

    I_m(a_1..a_n) = sum_{k>=0} sum_{m_1+..+m_n=m} prod_i (1+a_i+k)^{-(1+m_i)},

which this module evaluates with no partial fractions anywhere, so it shares
no machinery with the closed-form path it referees. The k-tail is bracketed by
shifted power-sum tails (every factor lies between (1+a_max+k)^{-(1+m_i)} and
(1+a_min+k)^{-(1+m_i)}), each bounded by integral comparison; the bracket
midpoint is added and its half-width certifies the error.

The quadrature oracles integrate the kernels themselves (adaptive QUADPACK,
which subdivides toward the singular endpoints; the 2-D case is the nested /
tensorized form with refinement landing near the (1,1) corner).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .errors import DivergentIntegralError, ToleranceNotMetError
from .pfd import compositions
from .zetacombo import DEFAULT_BUDGET, PrecisionBudget

__all__ = [
    "SeriesTailBound",
    "series_tail_bound",
    "series_partial",
    "series_oracle",
    "quad_oracle_1d",
    "quad_oracle_2d",
]

_MAX_TERMS = 1 << 23


@dataclass(frozen=True)
class SeriesTailBound:
    """Certified bracket for the k > K remainder of the oracle series."""

    terms_used: int
    tail_low: float
    tail_high: float

    @property
    def tail_estimate(self) -> float:
        """Overestimate of the true remainder."""
        return self.tail_high

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.tail_low + self.tail_high)

    @property
    def half_width(self) -> float:
        return 0.5 * (self.tail_high - self.tail_low)


def _validate(m: int, a: tuple[int, ...]) -> None:
    if m < 0 or any(ai < 0 for ai in a) or not a:
        raise ValueError(f"need m >= 0 and nonempty nonnegative exponents, got m={m}, a={a}")
    if len(a) == 1 and m == 0:
        raise DivergentIntegralError("series diverges for n = 1 with m = 0")


def series_tail_bound(m: int, a: tuple[int, ...], terms: int) -> SeriesTailBound:
    """Bracket the k > terms remainder via integral comparison.

    With p = n + m, the remainder lies between the p-power tails shifted by
    a_max and a_min, times the composition count.
    """
    _validate(m, a)
    n = len(a)
    p = n + m
    count = math.comb(m + n - 1, m)
    hi_start = terms + min(a) + 1  # integral comparison from M-1 for the upper bound
    lo_start = terms + max(a) + 2
    high = count * hi_start ** (1 - p) / (p - 1)
    low = count * lo_start ** (1 - p) / (p - 1)
    return SeriesTailBound(terms_used=terms, tail_low=low, tail_high=high)


def series_partial(m: int, a: tuple[int, ...], terms: int) -> float:
    """Partial sum over k = 0..terms of the composition series."""
    _validate(m, a)
    k = np.arange(terms + 1, dtype=np.float64)
    total = np.zeros_like(k)
    for parts in compositions(m, len(a)):
        factor = np.ones_like(k)
        for ai, mi in zip(a, parts):
            factor *= (1.0 + ai + k) ** (-(1 + mi))
        total += factor
    return math.fsum(total.tolist())


def series_oracle(m: int, a: tuple[int, ...] | list[int], budget: PrecisionBudget = DEFAULT_BUDGET) -> float:
    """Series value of I_m(a_1..a_n) with certified absolute error below tol."""
    a = tuple(a)
    _validate(m, a)
    terms = 64
    while True:
        bound = series_tail_bound(m, a, terms)
        if 2 * bound.half_width < budget.tol:
            break
        if terms >= _MAX_TERMS:
            raise ToleranceNotMetError(
                f"series tail bracket would not close at {terms} terms", 2 * bound.half_width
            )
        terms *= 2
    return series_partial(m, a, terms) + bound.midpoint


def quad_oracle_1d(m: int, a: int, budget: PrecisionBudget = DEFAULT_BUDGET) -> float:
    """Adaptive quadrature of ((-1)^m/m!) int_0^1 log^m(x) x^a / (1-x) dx.

    Requires m >= 1 (the m = 0 one-dimensional kernel diverges).
    """
    if m < 1:
        raise DivergentIntegralError("the 1-D kernel integral diverges for m = 0")
    if a < 0:
        raise ValueError(f"exponent must be >= 0, got {a}")
    sign = -1.0 if m % 2 else 1.0
    norm = sign / math.factorial(m)

    def integrand(x: float) -> float:
        return norm * math.log(x) ** m * x**a / (1.0 - x)

    eps = min(budget.tol / 4, 1e-11)
    value, err = integrate.quad(integrand, 0.0, 1.0, epsabs=eps, epsrel=eps, limit=200)
    if err > budget.tol:
        raise ToleranceNotMetError("1-D quadrature did not reach the requested tolerance", err)
    return value


def quad_oracle_2d(m: int, a: int, b: int, budget: PrecisionBudget = DEFAULT_BUDGET) -> float:
    """Tensorized adaptive quadrature of the 2-D kernel integral I_m(a, b).

    Iterated 1-D adaptive passes: the inner y-integral is resolved to a fixed
    absolute tolerance at every outer node, so the total error splits as
    (outer estimate) + (inner tolerance over a unit-length domain). Valid for
    every m, a, b >= 0 (including m = 0, a = b = 0, which is finite); a
    tolerance failure is reported rather than guessed around.
    """
    if m < 0 or a < 0 or b < 0:
        raise ValueError(f"parameters must be >= 0, got m={m}, a={a}, b={b}")
    sign = -1.0 if m % 2 else 1.0
    norm = sign / math.factorial(m)
    inner_eps = min(budget.tol / 4, 1e-10)

    def inner(x: float) -> float:
        def integrand(y: float) -> float:
            return norm * math.log(x * y) ** m * x**a * y**b / (1.0 - x * y)

        value, _ = integrate.quad(integrand, 0.0, 1.0, epsabs=inner_eps, epsrel=0.0, limit=200)
        return value

    value, outer_err = integrate.quad(inner, 0.0, 1.0, epsabs=inner_eps, epsrel=0.0, limit=200)
    achieved = outer_err + inner_eps
    if achieved > budget.tol:
        raise ToleranceNotMetError("2-D quadrature did not reach the requested tolerance", achieved)
    return value
