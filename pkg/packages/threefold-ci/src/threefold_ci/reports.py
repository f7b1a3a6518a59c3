"""Pydantic results of the complete-intersection checks."""

from pydantic import BaseModel, Field
from threefold_chow import Rational


class BracketSplit(BaseModel):
    """c2_coeff = first bracket + g(sum d)."""

    spec: str
    c2_coeff: int
    first: Rational
    second: Rational
    identity_holds: bool

    @property
    def certificate_holds(self) -> bool:
        return self.first >= 0 and self.second > 0


class ChernNumbers(BaseModel):
    degree: int
    c1_cubed: int
    c1_c2: int
    c3: int  # topological Euler characteristic


class GLandmarks(BaseModel):
    n: int
    at_n_minus_3: Rational
    at_n_minus_2: Rational
    at_n_minus_1: Rational
    at_n: Rational
    critical_point: Rational
    critical_below_n: bool
    increasing_beyond_n: bool
    positive: bool


class Counterexample(BaseModel):
    n: int
    degrees: list[int]
    reason: str
    split: BracketSplit


class SweepResult(BaseModel):
    """Outcome of the exhaustive c2 positivity check."""

    n_max: int
    d_max: int
    checked: int = 0
    all_positive: bool = True
    counterexample: Counterexample | None = None
    notes: list[str] = Field(default_factory=list)
