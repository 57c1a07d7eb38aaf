"""Exact evaluation of log-power kernel integrals over unit cubes.

The integrals I_m(a_1..a_n) - log^m of the coordinate product against
prod x_i^{a_i} / (1 - prod x_i), normalized by (-1)^m/m! - reduce through
exact partial fractions to rational combinations of zeta values. This package
computes them exactly, checks the clearing-denominator bounds, builds the
zeta(5) approximation sequence J3(n) with its squeeze bounds, and referees
everything against independent series/quadrature/Monte-Carlo oracles.
"""

from .errors import DivergentIntegralError, ToleranceNotMetError
from .integrals import (
    DenominatorReport,
    IntegralSpec,
    check_denominator,
    denominator_bound,
    eval_general,
    eval_pair,
    eval_single,
)
from .oracle import SeriesTailBound, quad_oracle_1d, quad_oracle_2d, series_oracle
from .pfd import MultisetSpec, PfdCoefficients, homogeneous_pfd, inhomogeneous_pfd, verify_pfd
from .rationals import Rational, harmonic, lcm_range, reduced_denominator
from .verify import VerificationReport, run_verification
from .zeta5 import (
    ApproxRow,
    McR2Result,
    approx_row,
    bounds,
    canonical_transform_check,
    divergence_scan,
    j3_exact,
    legendre_coeffs,
    log_inequality_check,
    mc_check_r2,
)
from .zetacombo import (
    DEFAULT_BUDGET,
    PrecisionBudget,
    ZetaCombo,
    combo_denominator,
    combo_eval,
    combo_eval_rational,
    hurwitz_combo,
    zeta_numeric,
    zeta_rational,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxRow",
    "DEFAULT_BUDGET",
    "DenominatorReport",
    "DivergentIntegralError",
    "IntegralSpec",
    "McR2Result",
    "MultisetSpec",
    "PfdCoefficients",
    "PrecisionBudget",
    "Rational",
    "SeriesTailBound",
    "ToleranceNotMetError",
    "VerificationReport",
    "ZetaCombo",
    "approx_row",
    "bounds",
    "canonical_transform_check",
    "check_denominator",
    "combo_denominator",
    "combo_eval",
    "combo_eval_rational",
    "denominator_bound",
    "divergence_scan",
    "eval_general",
    "eval_pair",
    "eval_single",
    "harmonic",
    "homogeneous_pfd",
    "hurwitz_combo",
    "inhomogeneous_pfd",
    "j3_exact",
    "lcm_range",
    "legendre_coeffs",
    "log_inequality_check",
    "mc_check_r2",
    "quad_oracle_1d",
    "quad_oracle_2d",
    "reduced_denominator",
    "run_verification",
    "series_oracle",
    "verify_pfd",
    "zeta_numeric",
    "zeta_rational",
]
