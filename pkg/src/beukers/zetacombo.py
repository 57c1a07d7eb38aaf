"""The exact value domain Q + sum_s Q * zeta(s) for integer s >= 2.

A `ZetaCombo` is a rational constant plus a finite, sparse rational-coefficient
combination of zeta values. Coefficients are formal: no relation between zeta
values (such as zeta(2) = pi^2/6) is modelled. Addition and scaling are exact
and re-canonicalize (zero coefficients are dropped).

Numeric evaluation is certified. zeta(s) is approximated by a *rational*
number: an integer fixed-point partial sum of k^{-s} up to K plus the exact
midpoint of the tail bracket

    sum_{k>K} k^{-s}  in  [K^{1-s}/(s-1) - K^{-s},  K^{1-s}/(s-1)],

whose width K^{-s} bounds the error. Keeping the approximant rational matters:
combos produced downstream can carry coefficients around 1e16 that cancel to
O(1e-3), far beyond what float accumulation could survive, so the combination
is assembled exactly and rounded to float only at the very end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .rationals import harmonic, reduced_denominator

__all__ = [
    "PrecisionBudget",
    "DEFAULT_BUDGET",
    "ZetaCombo",
    "hurwitz_combo",
    "zeta_rational",
    "zeta_numeric",
    "combo_eval",
    "combo_eval_rational",
    "combo_denominator",
]


@dataclass(frozen=True)
class PrecisionBudget:
    """Maximum permitted absolute error of a numeric evaluation."""

    tol: float

    def __post_init__(self) -> None:
        if not self.tol > 0:
            raise ValueError(f"tolerance must be positive, got {self.tol}")


DEFAULT_BUDGET = PrecisionBudget(1e-10)


class ZetaCombo:
    """Immutable element of Q + sum Q*zeta(s), s >= 2 integer."""

    __slots__ = ("constant", "_terms")

    def __init__(self, constant: Fraction | int = 0, terms: Mapping[int, Fraction | int] | None = None):
        object.__setattr__(self, "constant", Fraction(constant))
        clean: dict[int, Fraction] = {}
        for s, q in (terms or {}).items():
            if not isinstance(s, int) or s < 2:
                raise ValueError(f"zeta index must be an integer >= 2, got {s!r}")
            q = Fraction(q)
            if q != 0:
                clean[s] = q
        object.__setattr__(self, "_terms", dict(sorted(clean.items())))

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("ZetaCombo is immutable")

    @classmethod
    def zeta(cls, s: int, coefficient: Fraction | int = 1) -> "ZetaCombo":
        return cls(0, {s: Fraction(coefficient)})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def coefficient(self, s: int) -> Fraction:
        return self._terms.get(s, Fraction(0))

    @property
    def is_rational(self) -> bool:
        return not self._terms

    def __add__(self, other):
        if isinstance(other, ZetaCombo):
            merged = dict(self._terms)
            for s, q in other._terms.items():
                merged[s] = merged.get(s, Fraction(0)) + q
            return ZetaCombo(self.constant + other.constant, merged)
        if isinstance(other, (int, Fraction)):
            return ZetaCombo(self.constant + other, self._terms)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return ZetaCombo(-self.constant, {s: -q for s, q in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (ZetaCombo, int, Fraction)):
            return self + (-other if isinstance(other, ZetaCombo) else ZetaCombo(-Fraction(other)))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return ZetaCombo(Fraction(other)) + (-self)
        return NotImplemented

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            scalar = Fraction(scalar)
            return ZetaCombo(self.constant * scalar, {s: q * scalar for s, q in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, ZetaCombo):
            return self.constant == other.constant and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return not self._terms and self.constant == other
        return NotImplemented

    def __hash__(self):
        return hash((self.constant, tuple(self._terms.items())))

    def __repr__(self):
        return f"ZetaCombo({self.constant!r}, {self._terms!r})"

    def __str__(self):
        parts = []
        for s, q in self._terms.items():
            if q == 1:
                parts.append(f"zeta({s})")
            elif q == -1:
                parts.append(f"-zeta({s})")
            else:
                parts.append(f"{q}*zeta({s})")
        if self.constant != 0 or not parts:
            parts.append(str(self.constant))
        out = " + ".join(parts)
        return out.replace("+ -", "- ")


def hurwitz_combo(s: int, a: int) -> ZetaCombo:
    """zeta(s, a+1) written as zeta(s) - H_s(a), exact.

    Only s >= 2 is admitted; s = 1 never arises because the harmonic parts of
    the integral representations cancel it.
    """
    if s < 2:
        raise ValueError(f"hurwitz_combo requires s >= 2, got {s}")
    if a < 0:
        raise ValueError(f"shift must be >= 0, got {a}")
    return ZetaCombo(-harmonic(s, a), {s: Fraction(1)})


# Best rational zeta approximant seen so far, per index s: (error bound, value).
_ZETA_CACHE: dict[int, tuple[float, Fraction]] = {}


def zeta_rational(s: int, eta: float) -> Fraction:
    """Rational Z with |Z - zeta(s)| < eta, certified.

    Partial sum over k <= K in integer fixed point (floor errors recentred),
    plus the exact tail-bracket midpoint K^{1-s}/(s-1) - K^{-s}/2. K is the
    smallest power-of-two-ish value with K^{-s} <= eta/2, so the bracket
    half-width alone stays under eta/2 and fixed-point noise has ample room.
    """
    if not isinstance(s, int) or s < 2:
        raise ValueError(f"zeta index must be an integer >= 2, got {s!r}")
    if not eta > 0:
        raise ValueError(f"error bound must be positive, got {eta}")
    cached = _ZETA_CACHE.get(s)
    if cached is not None and cached[0] <= eta:
        return cached[1]

    k_min = (2.0 / eta) ** (1.0 / s)
    K = 16
    while K < k_min:
        K *= 2
    # B fixed-point bits: K terms each with floor error < 2^-B must stay << eta
    B = max(96, int(math.log2(K / eta)) + 12)
    scale = 1 << B
    acc = 0
    for k in range(1, K + 1):
        acc += scale // k**s
    partial = Fraction(2 * acc + K, 2 * scale)  # recentred: floor bias is one-sided
    tail_mid = Fraction(2 * K - (s - 1), 2 * (s - 1) * K**s)
    value = partial + tail_mid
    _ZETA_CACHE[s] = (eta, value)
    return value


def zeta_numeric(s: int, budget: PrecisionBudget = DEFAULT_BUDGET) -> float:
    """zeta(s) as a float with absolute error below the budget."""
    return float(zeta_rational(s, budget.tol / 2))


def combo_eval_rational(v: ZetaCombo, budget: PrecisionBudget = DEFAULT_BUDGET) -> Fraction:
    """Exact-rational approximant of the combo's value, within the budget.

    The budget is split evenly across the zeta terms; each zeta value is
    resolved tightly enough that its coefficient-weighted error stays inside
    its share, then everything is combined exactly.
    """
    if v.is_rational:
        return v.constant
    terms = v.terms
    share = budget.tol / (2 * len(terms))
    acc = v.constant
    for s, q in terms.items():
        acc += q * zeta_rational(s, share / float(abs(q)))
    return acc


def combo_eval(v: ZetaCombo, budget: PrecisionBudget = DEFAULT_BUDGET) -> float:
    """Numeric value of the combo; exact when it is a pure rational."""
    return float(combo_eval_rational(v, budget))


def combo_denominator(v: ZetaCombo) -> int:
    """Least positive q such that q*v has integer constant and coefficients."""
    q = reduced_denominator(v.constant)
    for coeff in v.terms.values():
        q = math.lcm(q, reduced_denominator(coeff))
    return q
