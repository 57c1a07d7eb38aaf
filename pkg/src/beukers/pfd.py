"""Exact partial fraction decomposition of products 1 / prod (c_i + x)^{b_i}.

Two flavours:

* homogeneous - all poles simple (distinct integers a_1..a_n), coefficients
  lambda_i = prod_{j != i} 1/(a_j - a_i);
* inhomogeneous - poles with multiplicities, coefficients mu_ij of
  (c_i + x)^{-j} obtained from the (b_i - j)-th derivative of the
  complementary product at x = -c_i, expanded as an explicit sum over
  compositions so everything stays in exact rational arithmetic.

`verify_pfd` certifies a decomposition by exact evaluation at sample points:
with at least n distinct non-pole points, agreement pins down the polynomial
identity obtained by clearing denominators (both sides carry degree n-1 data).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Iterator, Sequence

__all__ = [
    "MultisetSpec",
    "PfdCoefficients",
    "homogeneous_pfd",
    "inhomogeneous_pfd",
    "verify_pfd",
    "compositions",
]


@dataclass(frozen=True)
class MultisetSpec:
    """Multiset {c_1^(b_1), ..., c_r^(b_r)} of integer points with multiplicities.

    Points are strictly increasing; every multiplicity is at least 1.
    """

    points: tuple[int, ...]
    multiplicities: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.points) != len(self.multiplicities) or not self.points:
            raise ValueError("points and multiplicities must be nonempty and of equal length")
        if any(b < 1 for b in self.multiplicities):
            raise ValueError(f"multiplicities must be >= 1, got {self.multiplicities}")
        if any(c2 <= c1 for c1, c2 in zip(self.points, self.points[1:])):
            raise ValueError(f"points must be strictly increasing, got {self.points}")

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "MultisetSpec":
        """Canonicalize a raw exponent list by sorting and grouping.

        Order-insensitive: any permutation of the input yields the same spec.
        """
        values = sorted(exponents)
        if not values:
            raise ValueError("need at least one exponent")
        points: list[int] = []
        mults: list[int] = []
        for v in values:
            if points and points[-1] == v:
                mults[-1] += 1
            else:
                points.append(v)
                mults.append(1)
        return cls(tuple(points), tuple(mults))

    _ITEM_RE = re.compile(r"^(-?\d+)(?:\^(\d+))?$")

    @classmethod
    def parse(cls, text: str) -> "MultisetSpec":
        """Parse ``"c^b,c^b,..."`` or a plain comma-separated integer list.

        Items like ``0^2`` carry an explicit multiplicity; repeated plain
        entries accumulate, so ``"0,0"`` means the same as ``"0^2"``.
        """
        exponents: list[int] = []
        pos = 0
        for item in text.split(","):
            stripped = item.strip()
            match = cls._ITEM_RE.match(stripped)
            if match is None:
                raise ValueError(f"bad multiset item {stripped!r} at position {pos}")
            mult = int(match.group(2)) if match.group(2) else 1
            if mult < 1:
                raise ValueError(f"multiplicity must be >= 1 in item {stripped!r} at position {pos}")
            exponents.extend([int(match.group(1))] * mult)
            pos += len(item) + 1
        return cls.from_exponents(exponents)

    @property
    def r(self) -> int:
        return len(self.points)

    @property
    def n(self) -> int:
        """Total count, multiplicities included."""
        return sum(self.multiplicities)

    @property
    def b_plus(self) -> int:
        return max(self.multiplicities)

    def exponents(self) -> tuple[int, ...]:
        """The expanded, sorted exponent list."""
        out: list[int] = []
        for c, b in zip(self.points, self.multiplicities):
            out.extend([c] * b)
        return tuple(out)


@dataclass(frozen=True)
class PfdCoefficients:
    """The mu table of a decomposition: mu[i][j-1] multiplies (c_i + x)^{-j}."""

    spec: MultisetSpec
    mu: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if len(self.mu) != self.spec.r:
            raise ValueError("one coefficient row per pole required")
        for row, b in zip(self.mu, self.spec.multiplicities):
            if len(row) != b:
                raise ValueError("row length must equal the pole multiplicity")

    def first_order_sum(self) -> Fraction:
        """Sum of mu_i1 over all poles (0 for any genuine decomposition with r >= 2)."""
        return sum((row[0] for row in self.mu), Fraction(0))


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `parts` nonnegative integers summing to `total`."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in compositions(total - head, parts - 1):
            yield (head, *rest)


def homogeneous_pfd(a: Sequence[int]) -> list[Fraction]:
    """Coefficients lambda_i with prod 1/(a_i+x) = sum lambda_i/(a_i+x).

    Requires pairwise distinct entries; a single factor returns [1].
    """
    if len(set(a)) != len(a):
        raise ValueError(f"points must be distinct, got {tuple(a)}; use inhomogeneous_pfd for repeated poles")
    if not a:
        raise ValueError("need at least one point")
    out = []
    for i, ai in enumerate(a):
        lam = Fraction(1)
        for j, aj in enumerate(a):
            if j != i:
                lam /= aj - ai
        out.append(lam)
    return out


def _mu_single(spec: MultisetSpec, i: int, j: int) -> Fraction:
    """mu_ij via the composition expansion of the (b_i - j)-th derivative.

    d^M/dx^M prod_{l != i} (c_l + x)^{-b_l} at x = -c_i, M = b_i - j, expands as
    (-1)^M sum over compositions M_1+..+M_{r-1}=M of
    prod_l C(b_l + M_l - 1, M_l) (c_l - c_i)^{-(b_l + M_l)}.
    """
    c = spec.points
    b = spec.multiplicities
    others = [(c[l], b[l]) for l in range(spec.r) if l != i]
    m_total = b[i] - j
    acc = Fraction(0)
    for parts in compositions(m_total, len(others)):
        term = Fraction(1)
        for (cl, bl), ml in zip(others, parts):
            term *= comb(bl + ml - 1, ml)
            term *= Fraction(1, (cl - c[i]) ** (bl + ml))
        acc += term
    return -acc if m_total % 2 else acc


def inhomogeneous_pfd(spec: MultisetSpec) -> PfdCoefficients:
    """All mu_ij with prod 1/(c_i+x)^{b_i} = sum_i sum_j mu_ij/(c_i+x)^j.

    A single pole (r = 1) yields the trivial decomposition. When every
    multiplicity is 1, the mu_i1 column reproduces homogeneous_pfd.
    """
    rows = []
    for i in range(spec.r):
        rows.append(tuple(_mu_single(spec, i, j) for j in range(1, spec.multiplicities[i] + 1)))
    return PfdCoefficients(spec=spec, mu=tuple(rows))


def verify_pfd(coeffs: PfdCoefficients, sample_points: Sequence[Fraction | int]) -> bool:
    """Exact check that both sides of the decomposition agree at every point.

    Rejects sample points equal to a pole -c_i.
    """
    spec = coeffs.spec
    for x in sample_points:
        x = Fraction(x)
        if any(x == -c for c in spec.points):
            raise ValueError(f"sample point {x} hits a pole")
        lhs = Fraction(1)
        for c, b in zip(spec.points, spec.multiplicities):
            lhs /= (c + x) ** b
        rhs = Fraction(0)
        for c, row in zip(spec.points, coeffs.mu):
            for j, mu in enumerate(row, start=1):
                rhs += mu / (c + x) ** j
        if lhs != rhs:
            return False
    return True
