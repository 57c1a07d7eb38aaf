"""Grid-driven verification suite behind the `verify` command and endpoint.

Five check families, each counting passes and failures over a deterministic
grid or seeded sample:

* pfd-identities      - coefficient row sums vanish and exact sample-point
                        verification certifies random decompositions;
* pair-consistency    - the dedicated two-index path agrees with the general
                        machinery at the coefficient level;
* oracle-agreement    - closed-form values match the independent series
                        oracle within tolerance;
* denominator-bound   - the minimal clearing denominator divides its bound;
* zeta5-envelope      - the squeeze bounds hold with positive slack.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .integrals import IntegralSpec, check_denominator, eval_general, eval_pair
from .oracle import series_oracle
from .pfd import MultisetSpec, homogeneous_pfd, inhomogeneous_pfd, verify_pfd
from .zeta5 import approx_row
from .zetacombo import PrecisionBudget, combo_eval

__all__ = ["CheckResult", "VerificationReport", "run_verification", "random_multiset"]

_DETAIL_CAP = 12


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    details: list[str] = field(default_factory=list)

    @property
    def total(self) -> int:
        return self.passed + self.failed

    def record(self, ok: bool, detail: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.details) < _DETAIL_CAP:
                self.details.append(detail)


@dataclass
class VerificationReport:
    checks: list[CheckResult]

    @property
    def ok(self) -> bool:
        return all(c.failed == 0 for c in self.checks)


def random_multiset(rng: random.Random, max_n: int = 6, max_point: int = 10) -> MultisetSpec:
    """Random multiset with r >= 2 distinct points and total size <= max_n."""
    r = rng.randint(2, min(4, max_n))
    points = sorted(rng.sample(range(0, max_point + 1), r))
    mults = [1] * r
    for _ in range(rng.randint(0, max_n - r)):
        mults[rng.randrange(r)] += 1
    return MultisetSpec(tuple(points), tuple(mults))


def _check_pfd(result: CheckResult, samples: int, seed: int) -> None:
    rng = random.Random(seed)
    for _ in range(samples):
        spec = random_multiset(rng)
        coeffs = inhomogeneous_pfd(spec)
        points = [Fraction(1, 2) + k for k in range(spec.n + 1)]
        ok = coeffs.first_order_sum() == 0 and verify_pfd(coeffs, points)
        if all(b == 1 for b in spec.multiplicities):
            lam = homogeneous_pfd(spec.points)
            ok = ok and sum(lam) == 0 and [row[0] for row in coeffs.mu] == lam
        result.record(ok, f"multiset {spec.points} x {spec.multiplicities}")


def _check_pairs(result: CheckResult, max_m: int, max_a: int) -> None:
    for m in range(max_m + 1):
        for a in range(max_a + 1):
            for b in range(max_a + 1):
                ok = eval_pair(m, a, b) == eval_general(IntegralSpec(m, (a, b)))
                result.record(ok, f"pair m={m} a={a} b={b}")


def _grid_multisets(max_n: int, max_a: int, n_min: int = 2):
    for n in range(n_min, max_n + 1):
        for a in itertools.combinations_with_replacement(range(max_a + 1), n):
            yield a


def _check_oracle(result: CheckResult, max_m: int, max_n: int, max_a: int, tol: float) -> None:
    budget = PrecisionBudget(tol / 4)
    for m in range(max_m + 1):
        for a in _grid_multisets(max_n, max_a, n_min=1):
            if len(a) == 1 and m == 0:
                continue
            spec = IntegralSpec(m, a)
            closed = combo_eval(eval_general(spec), budget)
            series = series_oracle(m, a, budget)
            result.record(abs(closed - series) < tol, f"oracle m={m} a={a} gap={abs(closed - series):.2e}")


def _check_denominators(result: CheckResult, max_m: int, max_n: int, max_a: int) -> None:
    for m in range(max_m + 1):
        for a in _grid_multisets(max_n, max_a):
            report = check_denominator(IntegralSpec(m, a))
            result.record(report.divides, f"denominator m={m} a={a} q={report.q} bound={report.bound}")


def _check_envelope(result: CheckResult, envelope_n: int, tol: float) -> None:
    budget = PrecisionBudget(tol)
    for n in range(1, envelope_n + 1):
        row = approx_row(n, budget)
        ok = row.lower < row.value - tol and row.value + tol < row.upper and row.value > tol
        result.record(ok, f"envelope n={n} lower={row.lower:.6g} value={row.value:.6g} upper={row.upper:.6g}")


def run_verification(
    max_m: int = 3,
    max_n: int = 4,
    max_a: int = 4,
    tol: float = 1e-8,
    pfd_samples: int = 200,
    envelope_n: int = 10,
    seed: int = 20250810,
) -> VerificationReport:
    """Run every check family over the requested grid; deterministic for a fixed seed."""
    if max_m < 0 or max_n < 1 or max_a < 0:
        raise ValueError("grid limits must satisfy max_m >= 0, max_n >= 1, max_a >= 0")
    pfd = CheckResult("pfd-identities")
    _check_pfd(pfd, pfd_samples, seed)
    pairs = CheckResult("pair-consistency")
    _check_pairs(pairs, max_m, max_a)
    oracle = CheckResult("oracle-agreement")
    _check_oracle(oracle, max_m, max_n, max_a, tol)
    denom = CheckResult("denominator-bound")
    _check_denominators(denom, max_m, max_n, max_a)
    envelope = CheckResult("zeta5-envelope")
    _check_envelope(envelope, envelope_n, tol)
    return VerificationReport([pfd, pairs, oracle, denom, envelope])
