"""Closed-form evaluation of the log-power kernel integrals I_m(a_1..a_n).

I_m(a_1..a_n) is the n-dimensional unit-cube integral of
log^m(prod x_i) * prod x_i^{a_i} / (1 - prod x_i), normalized by (-1)^m/m!.
Expanding the geometric kernel, it equals the series
sum_{k>=0} of the m-th t-derivative data of prod 1/(1+a_i+k+t), which partial
fractions reduce to harmonic differences plus Hurwitz zeta values:

* n = 1: I_m(a) = zeta(m+1, a+1), convergent only for m >= 1;
* multiset with a single point (r = 1): C(m+n-1, m) * zeta(n+m, c_1+1);
* otherwise: sum_{i<r} mu_i1 (H_{m+1}(c_r) - H_{m+1}(c_i))
             + sum_i sum_{j>=2} C(m+j-1, m) mu_ij zeta(j+m, c_i+1).

The two-index case keeps its own independent code path (harmonic difference
quotient / (m+1) zeta(m+2, a+1)) so it can cross-check the general machinery.

`denominator_bound` and `check_denominator` cover the divisibility estimate:
the minimal clearing denominator q of the resulting combo divides
(b+ - 1)! * lcm(1..c_r)^{m+b+} * prod_{s<t} (c_t - c_s)^{n-1}  (r > 1), or
lcm(1..c_1)^{n+m} (r = 1, with the empty lcm range taken as 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .errors import DivergentIntegralError
from .pfd import MultisetSpec, inhomogeneous_pfd
from .rationals import harmonic, lcm_range
from .zetacombo import ZetaCombo, combo_denominator, hurwitz_combo

__all__ = [
    "IntegralSpec",
    "DenominatorReport",
    "eval_single",
    "eval_pair",
    "eval_general",
    "denominator_bound",
    "check_denominator",
]


@dataclass(frozen=True)
class IntegralSpec:
    """Parameters of I_m(a_1..a_n): log power m >= 0 and nonnegative exponents."""

    m: int
    a: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError(f"log power must be >= 0, got {self.m}")
        if not self.a:
            raise ValueError("need at least one exponent")
        if any(ai < 0 for ai in self.a):
            raise ValueError(f"exponents must be >= 0, got {self.a}")
        if len(self.a) == 1 and self.m == 0:
            raise DivergentIntegralError("I_0(a) diverges for n = 1; need m >= 1")
        object.__setattr__(self, "a", tuple(self.a))

    @property
    def n(self) -> int:
        return len(self.a)

    def multiset(self) -> MultisetSpec:
        return MultisetSpec.from_exponents(self.a)


@dataclass(frozen=True)
class DenominatorReport:
    spec: IntegralSpec
    q: int
    bound: int
    divides: bool


def eval_single(m: int, a: int) -> ZetaCombo:
    """I_m(a) for the one-dimensional kernel: zeta(m+1, a+1)."""
    if m < 1:
        raise DivergentIntegralError("I_0(a) diverges for n = 1; need m >= 1")
    if a < 0:
        raise ValueError(f"exponent must be >= 0, got {a}")
    return hurwitz_combo(m + 1, a)


def eval_pair(m: int, a: int, b: int) -> ZetaCombo:
    """I_m(a, b), symmetric in (a, b).

    Equal exponents give (m+1) * zeta(m+2, a+1); distinct exponents give the
    pure rational (H_{m+1}(max) - H_{m+1}(min)) / (max - min).
    """
    if m < 0 or a < 0 or b < 0:
        raise ValueError(f"parameters must be >= 0, got m={m}, a={a}, b={b}")
    if a == b:
        return (m + 1) * hurwitz_combo(m + 2, a)
    lo, hi = min(a, b), max(a, b)
    return ZetaCombo(Fraction(harmonic(m + 1, hi) - harmonic(m + 1, lo), hi - lo))


def eval_general(spec: IntegralSpec) -> ZetaCombo:
    """I_m(a_1..a_n) via partial fractions; permutation-invariant in the exponents."""
    if spec.n == 1:
        return eval_single(spec.m, spec.a[0])
    ms = spec.multiset()
    m = spec.m
    if ms.r == 1:
        return comb(m + spec.n - 1, m) * hurwitz_combo(spec.n + m, ms.points[0])
    mu = inhomogeneous_pfd(ms).mu
    c = ms.points
    h_top = harmonic(m + 1, c[-1])
    out = ZetaCombo(0)
    for i in range(ms.r - 1):
        out = out + ZetaCombo(mu[i][0] * (h_top - harmonic(m + 1, c[i])))
    for i in range(ms.r):
        for j in range(2, ms.multiplicities[i] + 1):
            out = out + comb(m + j - 1, m) * mu[i][j - 1] * hurwitz_combo(j + m, c[i])
    return out


def denominator_bound(spec: IntegralSpec) -> int:
    """The divisibility bound for the clearing denominator of I_m(a_1..a_n)."""
    if spec.n < 2:
        raise ValueError("denominator bound is defined for n >= 2")
    ms = spec.multiset()
    c = ms.points
    if ms.r == 1:
        base = 1 if c[0] == 0 else lcm_range(c[0])
        return base ** (spec.n + spec.m)
    base = 1 if c[-1] == 0 else lcm_range(c[-1])
    out = factorial(ms.b_plus - 1) * base ** (spec.m + ms.b_plus)
    for s in range(ms.r):
        for t in range(s + 1, ms.r):
            out *= (c[t] - c[s]) ** (spec.n - 1)
    return out


def check_denominator(spec: IntegralSpec) -> DenominatorReport:
    """Evaluate, extract the minimal clearing q, and compare against the bound."""
    q = combo_denominator(eval_general(spec))
    bound = denominator_bound(spec)
    return DenominatorReport(spec=spec, q=q, bound=bound, divides=bound % q == 0)
