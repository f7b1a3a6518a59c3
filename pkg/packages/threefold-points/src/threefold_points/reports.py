"""Pydantic results of the n-point decisions."""

from pydantic import BaseModel, Field
from threefold_chow import Rational
from threefold_property import DeductionTrace

from .config import CaseLabel


class DegreeDecision(BaseModel):
    """Whether the constraints force deg = 0 for n points."""

    n: int
    forced: bool
    case: CaseLabel
    raw: bool = False
    system: list[str] = Field(default_factory=list)  # one constraint per line
    trace: DeductionTrace


class AveragingCertificate(BaseModel):
    """The uniform combination of the six-point constraints against the averaged bound."""

    n: int
    tuples: int
    weight: Rational
    combination: str
    averaged: str
    matches: bool
    projection: list[str] | None = None  # FM projection onto (deg, S_beta), small n only
    projection_implies_bound: bool | None = None


class RedundancyReport(BaseModel):
    n: int
    bound_implied: bool  # c1^2 identity + signs imply the 11/2 bound
    forced_with_c1_squared: bool
    forced_with_sum_bound: bool


class CrossCheckReport(BaseModel):
    """Intersection numbers on the instantiated model against the closed forms."""

    n: int
    zeta: str
    zeta_c2: Rational
    zeta_c1_sq: Rational
    c2_closed_form: Rational
    c1_sq_closed_form: Rational
    on_c2_locus: bool
    c1_sq_on_locus: Rational  # 22 deg - 4 sum beta - 2 sum alpha
    matches: bool
