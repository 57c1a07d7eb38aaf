"""Pydantic request/response models for the evaluation service.

Exact rationals travel as decimal-free "p/q" strings so nothing is lost on
the wire; zeta coefficients are keyed by the integer index s (JSON object
keys, hence strings). Table integers A_n, B_n, d_n stay JSON integers -
Python serializes them at arbitrary precision.
"""

from __future__ import annotations

from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field

DEFAULT_PRECISION = 1e-10


def fraction_str(x: Fraction) -> str:
    return str(Fraction(x))


def parse_fraction(text: str) -> Fraction:
    return Fraction(text.strip())


class PfdRequest(BaseModel):
    spec: str = Field(description='multiset grammar: "c^b,c^b,..." or a plain integer list')


class PfdResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    points: list[int]
    multiplicities: list[int]
    lam: list[str] | None = Field(default=None, alias="lambda")
    mu: list[list[str]] | None = None
    sum_mu1: str
    verified: bool


class EvalRequest(BaseModel):
    m: int = Field(ge=0)
    a: list[int] = Field(min_length=1)
    precision: float = Field(default=DEFAULT_PRECISION, gt=0)


class EvalResponse(BaseModel):
    m: int
    a: list[int]
    constant: str
    terms: dict[str, str]
    value: float
    q: int


class DenomCheckRequest(BaseModel):
    m: int = Field(ge=0)
    a: list[int] = Field(min_length=2)


class DenomCheckResponse(BaseModel):
    m: int
    a: list[int]
    q: int
    bound: int
    divides: bool


class TableRequest(BaseModel):
    n_max: int = Field(ge=1)
    precision: float = Field(default=DEFAULT_PRECISION, gt=0)


class TableRow(BaseModel):
    n: int
    lower: float
    value: float
    upper: float
    a_n: int
    b_n: int
    d_n: int
    scaled: float


class TableResponse(BaseModel):
    rows: list[TableRow]


class BoundsRequest(BaseModel):
    n: int = Field(ge=1)


class BoundsResponse(BaseModel):
    n: int
    lower: float
    upper: float


class VerifyRequest(BaseModel):
    max_m: int = Field(default=3, ge=0)
    max_n: int = Field(default=4, ge=1)
    max_a: int = Field(default=4, ge=0)
    precision: float = Field(default=1e-8, gt=0)
    pfd_samples: int = Field(default=200, ge=1)
    envelope_n: int = Field(default=10, ge=1)
    seed: int = 20250810


class CheckOutcome(BaseModel):
    name: str
    passed: int
    failed: int
    total: int
    details: list[str]


class VerifyResponse(BaseModel):
    ok: bool
    checks: list[CheckOutcome]


class McR2Request(BaseModel):
    n: int = Field(ge=1)
    samples: int = Field(default=1_000_000, ge=1)
    seed: int = 0


class McR2Response(BaseModel):
    n: int
    samples: int
    seed: int
    estimate: float
    target: float
    relative_error: float
