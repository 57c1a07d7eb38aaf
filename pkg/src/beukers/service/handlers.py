"""Request handlers shared by the HTTP endpoints and the in-process CLI client.

Each handler maps a request model onto the core package and back into a
response model; the FastAPI layer adds nothing but routing and error
translation, so the CLI can call these directly without a server.
"""

from __future__ import annotations

from fractions import Fraction

from .. import verify as verify_mod
from ..integrals import IntegralSpec, check_denominator, eval_general
from ..pfd import MultisetSpec, inhomogeneous_pfd, verify_pfd
from ..zeta5 import approx_row, bounds, mc_check_r2
from ..zetacombo import PrecisionBudget, combo_denominator, combo_eval
from . import schemas


def handle_pfd(request: schemas.PfdRequest) -> schemas.PfdResponse:
    spec = MultisetSpec.parse(request.spec)
    coeffs = inhomogeneous_pfd(spec)
    # half-integers can never hit an integer pole -c_i
    sample_points = [Fraction(2 * k + 1, 2) for k in range(spec.n)]
    verified = verify_pfd(coeffs, sample_points)
    mu_rows = [[schemas.fraction_str(mu) for mu in row] for row in coeffs.mu]
    simple = all(b == 1 for b in spec.multiplicities)
    return schemas.PfdResponse(
        points=list(spec.points),
        multiplicities=list(spec.multiplicities),
        lam=[row[0] for row in mu_rows] if simple else None,
        mu=None if simple else mu_rows,
        sum_mu1=schemas.fraction_str(coeffs.first_order_sum()),
        verified=verified,
    )


def handle_eval(request: schemas.EvalRequest) -> schemas.EvalResponse:
    spec = IntegralSpec(request.m, tuple(request.a))
    combo = eval_general(spec)
    return schemas.EvalResponse(
        m=request.m,
        a=list(request.a),
        constant=schemas.fraction_str(combo.constant),
        terms={str(s): schemas.fraction_str(q) for s, q in combo.terms.items()},
        value=combo_eval(combo, PrecisionBudget(request.precision)),
        q=combo_denominator(combo),
    )


def handle_denom_check(request: schemas.DenomCheckRequest) -> schemas.DenomCheckResponse:
    report = check_denominator(IntegralSpec(request.m, tuple(request.a)))
    return schemas.DenomCheckResponse(
        m=request.m, a=list(request.a), q=report.q, bound=report.bound, divides=report.divides
    )


def handle_table(request: schemas.TableRequest) -> schemas.TableResponse:
    budget = PrecisionBudget(request.precision)
    rows = []
    for n in range(1, request.n_max + 1):
        row = approx_row(n, budget)
        rows.append(
            schemas.TableRow(
                n=row.n,
                lower=row.lower,
                value=row.value,
                upper=row.upper,
                a_n=row.a_n,
                b_n=row.b_n,
                d_n=row.d_n,
                scaled=row.scaled,
            )
        )
    return schemas.TableResponse(rows=rows)


def handle_bounds(request: schemas.BoundsRequest) -> schemas.BoundsResponse:
    lower, upper = bounds(request.n)
    return schemas.BoundsResponse(n=request.n, lower=lower, upper=upper)


def handle_verify(request: schemas.VerifyRequest) -> schemas.VerifyResponse:
    report = verify_mod.run_verification(
        max_m=request.max_m,
        max_n=request.max_n,
        max_a=request.max_a,
        tol=request.precision,
        pfd_samples=request.pfd_samples,
        envelope_n=request.envelope_n,
        seed=request.seed,
    )
    return schemas.VerifyResponse(
        ok=report.ok,
        checks=[
            schemas.CheckOutcome(
                name=c.name, passed=c.passed, failed=c.failed, total=c.total, details=c.details
            )
            for c in report.checks
        ],
    )


def handle_mc_r2(request: schemas.McR2Request) -> schemas.McR2Response:
    result = mc_check_r2(request.n, request.samples, request.seed)
    return schemas.McR2Response(
        n=request.n,
        samples=request.samples,
        seed=request.seed,
        estimate=result.estimate,
        target=result.target,
        relative_error=result.relative_error,
    )
