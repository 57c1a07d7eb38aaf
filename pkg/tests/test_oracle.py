import math

import mpmath
import pytest

from beukers.errors import DivergentIntegralError
from beukers.oracle import (
    quad_oracle_1d,
    quad_oracle_2d,
    series_oracle,
    series_partial,
    series_tail_bound,
)
from beukers.pfd import compositions
from beukers.zetacombo import PrecisionBudget, combo_eval, hurwitz_combo

mpmath.mp.dps = 30

BUDGET = PrecisionBudget(1e-10)


def composition_inner_sum(m, a, k):
    """The per-k summand of the oracle series, in plain floats."""
    total = 0.0
    for parts in compositions(m, len(a)):
        term = 1.0
        for ai, mi in zip(a, parts):
            term *= (1.0 + ai + k) ** (-(1 + mi))
        total += term
    return total


class TestCompositionFormula:
    """The series summand must equal the m-th derivative data of the kernel.

    High-precision numerical differentiation of t -> prod 1/(1+a_i+k+t) at
    t = 0 is the referee; this validates the expansion before it referees
    anything else.
    """

    @pytest.mark.parametrize("m", [0, 1, 2, 3, 4])
    @pytest.mark.parametrize("a", [(0, 1), (2, 2), (0, 1, 3), (1, 1, 2, 4)])
    @pytest.mark.parametrize("k", [0, 1, 5])
    def test_matches_high_precision_derivative(self, m, a, k):
        def kernel(t):
            out = mpmath.mpf(1)
            for ai in a:
                out /= 1 + ai + k + t
            return out

        derivative = mpmath.diff(kernel, 0, m)
        expected = float((-1) ** m * derivative / mpmath.factorial(m))
        assert composition_inner_sum(m, a, k) == pytest.approx(expected, rel=1e-10)

    def test_partial_sum_uses_same_expansion(self):
        a = (0, 2, 3)
        direct = sum(composition_inner_sum(2, a, k) for k in range(11))
        assert series_partial(2, a, 10) == pytest.approx(direct, rel=1e-12)


class TestSeriesOracle:
    def test_telescoping_pair(self):
        assert series_oracle(0, (0, 1), BUDGET) == pytest.approx(1.0, abs=1e-10)

    def test_telescoping_triple(self):
        assert series_oracle(0, (0, 1, 2), BUDGET) == pytest.approx(0.25, abs=1e-10)

    def test_zeta_two(self):
        assert series_oracle(1, (0,), BUDGET) == pytest.approx(float(mpmath.zeta(2)), abs=1e-10)

    def test_rejects_divergent(self):
        with pytest.raises(DivergentIntegralError):
            series_oracle(0, (3,), BUDGET)

    def test_tail_bracket_is_certified(self):
        # the true remainder sits inside [low, high], and doubling the cutoff
        # moves the result by less than the reported estimate
        m, a = 1, (0, 2)
        for terms in (128, 1024):
            bound = series_tail_bound(m, a, terms)
            remainder = sum(composition_inner_sum(m, a, k) for k in range(terms + 1, terms + 200_000))
            assert bound.tail_low <= remainder <= bound.tail_high
            assert bound.tail_estimate >= remainder
        v1 = series_partial(m, a, 1024) + series_tail_bound(m, a, 1024).midpoint
        v2 = series_partial(m, a, 2048) + series_tail_bound(m, a, 2048).midpoint
        assert abs(v1 - v2) < series_tail_bound(m, a, 1024).tail_estimate


class TestQuadOracle1D:
    @pytest.mark.parametrize("m,a", [(1, 0), (1, 1), (4, 0), (3, 2)])
    def test_matches_hurwitz(self, m, a):
        expected = combo_eval(hurwitz_combo(m + 1, a), PrecisionBudget(1e-12))
        assert quad_oracle_1d(m, a, PrecisionBudget(1e-9)) == pytest.approx(expected, abs=1e-9)

    def test_rejects_m_zero(self):
        with pytest.raises(DivergentIntegralError):
            quad_oracle_1d(0, 1, BUDGET)


class TestQuadOracle2D:
    def test_examples(self):
        b = PrecisionBudget(1e-8)
        assert quad_oracle_2d(3, 0, 1, b) == pytest.approx(1.0, abs=1e-8)
        assert quad_oracle_2d(0, 0, 0, b) == pytest.approx(float(mpmath.zeta(2)), abs=1e-8)
        expected = 4 * float(mpmath.zeta(5) - 1 - mpmath.mpf(1) / 32)
        assert quad_oracle_2d(3, 2, 2, b) == pytest.approx(expected, abs=1e-8)

    def test_oracle_vs_oracle(self):
        # series and quadrature referee each other where both apply
        b = PrecisionBudget(1e-8)
        for m, a in [(1, (0, 0)), (2, (1, 2)), (3, (0, 2)), (0, (2, 3))]:
            assert quad_oracle_2d(m, a[0], a[1], b) == pytest.approx(series_oracle(m, a, b), abs=2e-8)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            quad_oracle_2d(1, -1, 0, BUDGET)


def test_series_matches_closed_form_sample():
    from beukers.integrals import IntegralSpec, eval_general

    b = PrecisionBudget(1e-9)
    for m, a in [(1, (0, 0, 1)), (0, (0, 1, 2, 3)), (3, (2, 2)), (2, (4,))]:
        closed = combo_eval(eval_general(IntegralSpec(m, a)), b)
        assert series_oracle(m, a, b) == pytest.approx(closed, abs=2e-9)
