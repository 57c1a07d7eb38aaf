"""The zeta(5) rational approximation programme.

P_n(x) = (1/n!) d^n/dx^n (x(1-x))^n has integer coefficients
p_j = (-1)^j C(n,j) C(n+j,n). The quantity

    J3(n) = -int_{(0,1)^2} log^3(xy) P_n(x) P_n(y) / (1-xy) dx dy
          = 6 * sum_{i,j} p_i p_j I_3(i, j)

is an exact combination A_n zeta(5) + B_n over d_n^5 with integers A_n, B_n
and d_n = lcm(1..n): the diagonal pairs contribute 24 sum p_j^2 times
zeta(5, j+1) material, the off-diagonal pairs pure rationals. J3(n) is
squeezed between 6/(n+1)^4 and 6 pi^2/(n+1/2)^2, and d_n^5 J3(n) staying
above 1 is exactly what stops the approximation being useful. Everything
exact is computed through the closed form; quadrature and Monte Carlo appear
only as cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np
from scipy import integrate

from .integrals import eval_pair
from .rationals import lcm_range
from .zetacombo import DEFAULT_BUDGET, PrecisionBudget, ZetaCombo, combo_eval_rational

__all__ = [
    "ApproxRow",
    "McR2Result",
    "legendre_coeffs",
    "j3_exact",
    "approx_row",
    "bounds",
    "divergence_scan",
    "log_inequality_check",
    "canonical_transform_check",
    "mc_check_r2",
]

_MC_BATCH = 1_000_000
_KERNEL_CUTOFF = 1e-12


def legendre_coeffs(n: int) -> tuple[int, ...]:
    """Integer coefficients p_0..p_n of P_n(x) = (1/n!) d^n/dx^n (x(1-x))^n.

    Expanding (x - x^2)^n and differentiating n times termwise gives
    p_j = (-1)^j C(n,j) C(n+j,n); in particular p_0 = 1 for every n.
    """
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    return tuple((-1) ** j * math.comb(n, j) * math.comb(n + j, n) for j in range(n + 1))


def j3_exact(n: int) -> ZetaCombo:
    """J3(n) as an exact combo; the only zeta term is zeta(5)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    p = legendre_coeffs(n)
    out = ZetaCombo(0)
    for i, pi in enumerate(p):
        out = out + (6 * pi * pi) * eval_pair(3, i, i)
        for j in range(i + 1, n + 1):
            out = out + (12 * pi * p[j]) * eval_pair(3, i, j)
    if set(out.terms) != {5}:
        raise ArithmeticError(f"J3({n}) produced unexpected zeta terms: {sorted(out.terms)}")
    return out


@dataclass(frozen=True)
class ApproxRow:
    """One row of the approximation table: J3(n) = (A_n zeta(5) + B_n) / d_n^5."""

    n: int
    a_n: int
    b_n: int
    d_n: int
    value: float
    lower: float
    upper: float
    scaled: float


def bounds(n: int) -> tuple[float, float]:
    """The squeeze (6/(n+1)^4, 6 pi^2/(n+1/2)^2)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return 6.0 / (n + 1) ** 4, 6.0 * math.pi**2 / (n + 0.5) ** 2


def approx_row(n: int, budget: PrecisionBudget = DEFAULT_BUDGET) -> ApproxRow:
    """Exact A_n, B_n, d_n plus numeric value, squeeze bounds and d_n^5-scaled value.

    d_n^5 clearing the denominators of both coefficients is asserted exactly;
    a failure would falsify the construction and raises.
    """
    combo = j3_exact(n)
    alpha = combo.coefficient(5)
    beta = combo.constant
    d = lcm_range(n)
    d5 = d**5
    a_n = alpha * d5
    b_n = beta * d5
    if a_n.denominator != 1 or b_n.denominator != 1:
        raise ArithmeticError(f"d_{n}^5 = {d5} does not clear J3({n}) = {combo}")
    approx = combo_eval_rational(combo, budget)
    lower, upper = bounds(n)
    return ApproxRow(
        n=n,
        a_n=int(a_n),
        b_n=int(b_n),
        d_n=d,
        value=float(approx),
        lower=lower,
        upper=upper,
        scaled=float(approx * d5),
    )


def divergence_scan(n_max: int, budget: PrecisionBudget = DEFAULT_BUDGET) -> list[tuple[int, float]]:
    """d_n^5 * J3(n) for n = 1..n_max.

    Every scanned value staying above 1 is checked here (that is the provable
    obstruction); monotonicity is left to the caller, because the sequence
    provably dips wherever lcm(1..n) plateaus while J3 keeps shrinking.
    """
    if n_max < 2:
        raise ValueError(f"need n_max >= 2, got {n_max}")
    rows = [(n, approx_row(n, budget).scaled) for n in range(1, n_max + 1)]
    offenders = [n for n, scaled in rows if scaled <= 1.0]
    if offenders:
        raise ArithmeticError(f"scaled sequence unexpectedly at or below 1 for n in {offenders}")
    return rows


def log_inequality_check(x: float, m: int) -> bool:
    """True iff m(1 - x^(-1/m)) <= log x <= m(x^(1/m) - 1).

    Float comparisons carry a relative epsilon so the equality case x = 1 and
    near-tight neighbourhoods are not lost to rounding.
    """
    if not x > 0:
        raise ValueError(f"need x > 0, got {x}")
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    log_x = math.log(x)
    root = x ** (1.0 / m)
    lower = m * (1.0 - 1.0 / root)
    upper = m * (root - 1.0)
    slack = 1e-12 * max(1.0, abs(log_x))
    return lower <= log_x + slack and log_x <= upper + slack


def _kernel_moment(x_exp: float, y_exp: float, power: float, f: float, eps: float) -> float:
    """int_0^1 s^x (1-s)^y / (1-f s)^power ds by adaptive quadrature."""

    def integrand(s: float) -> float:
        return s**x_exp * (1.0 - s) ** y_exp / (1.0 - f * s) ** power

    value, _ = integrate.quad(integrand, 0.0, 1.0, epsabs=eps, epsrel=eps, limit=300)
    return value


def canonical_transform_check(
    a: float, b: float, n: int, f: float, budget: PrecisionBudget = DEFAULT_BUDGET
) -> bool:
    """Numerically confirm L(a,b;n+1) = (1-f)^(b-n) L(b,a;a+b+1-n).

    L(a,b;p) is the kernel moment int_0^1 s^a (1-s)^b (1-fs)^{-p} ds. The swap
    comes from the substitution s -> (1-r)/(1-fr).
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if a <= -1 or b <= -1 or not 0.0 < f < 1.0:
        raise ValueError(f"divergent parameters: a={a}, b={b}, f={f}")
    eps = min(budget.tol / 8, 1e-11)
    lhs = _kernel_moment(a, b, n + 1, f, eps)
    rhs = (1.0 - f) ** (b - n) * _kernel_moment(b, a, a + b + 1 - n, f, eps)
    return abs(lhs - rhs) <= budget.tol


class McR2Result(NamedTuple):
    estimate: float
    target: float
    relative_error: float


def mc_check_r2(n: int, samples: int, seed: int) -> McR2Result:
    """Seeded Monte Carlo estimate of the 4-D log-kernel integral R2(n).

    R2(n) integrates (x xb y yb)^n s^n ub^n / (1-fs)^{n+1} times the kernel
    log(s ub / (u sb)) / (s - u) over the unit 4-cube, with f = 1-xy and
    xb = 1-x etc. Near the diagonal the kernel evaluates via its limit
    1/(s(1-s)) to dodge catastrophic cancellation. Fixed-size batches reduced
    in order make a fixed seed bit-reproducible. The target is the exact
    J3(n)/6; the relative gap between estimate and target is reported, and
    judging it is the caller's business.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if samples < 1:
        raise ValueError(f"need samples >= 1, got {samples}")
    rng = np.random.default_rng(seed)
    total = 0.0
    remaining = samples
    while remaining > 0:
        size = min(_MC_BATCH, remaining)
        x, y, s, u = rng.random((4, size))
        f = 1.0 - x * y
        sb = 1.0 - s
        ub = 1.0 - u
        diff = s - u
        with np.errstate(divide="ignore", invalid="ignore"):
            kernel = np.log((s * ub) / (u * sb)) / diff
        near = np.abs(diff) < _KERNEL_CUTOFF
        if near.any():
            kernel[near] = 1.0 / (s[near] * sb[near])
        values = (x * (1.0 - x) * y * (1.0 - y)) ** n
        values *= s**n * ub**n
        values /= (1.0 - f * s) ** (n + 1)
        values *= kernel
        total += float(values.sum())
        remaining -= size
    estimate = total / samples
    target = float(combo_eval_rational(j3_exact(n), PrecisionBudget(1e-9))) / 6.0
    return McR2Result(estimate=estimate, target=target, relative_error=abs(estimate - target) / target)
