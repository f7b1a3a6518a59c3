"""Pydantic report models returned by the checks."""

from enum import StrEnum
from fractions import Fraction

from pydantic import BaseModel, Field, computed_field
from threefold_chow import Rational, format_rational


class PropertyAReport(BaseModel):
    """Values entering the Property A hypotheses for one class.

    Nefness of ``zeta`` is a caller assertion and is never checked.
    """

    zeta: str
    zeta_sq: dict[str, Rational]  # non-zero coordinates of zeta^2 in H^4
    zeta_c1_sq: Rational
    zeta_c2: Rational

    @computed_field
    @property
    def zeta_sq_text(self) -> str:
        return " + ".join(f"{format_rational(v)}*{k}" for k, v in self.zeta_sq.items()) or "0"

    @computed_field
    @property
    def hypotheses_met(self) -> bool:
        return not self.zeta_sq and self.zeta_c1_sq >= 0 and self.zeta_c2 <= 0


class Theorem1Reason(StrEnum):
    POINT_CENTER = "point-center"
    ODD_AND_DECOMPOSABLE = "odd-degree-and-decomposable"
    FAILS_PARITY = "fails-parity"
    DECOMPOSABILITY_UNKNOWN = "decomposability-unknown"
    NOT_DECOMPOSABLE = "not-decomposable"


class Theorem1Verdict(BaseModel):
    """Whether Property A passes from the parent to the blowup along a center."""

    applicable: bool
    reason: Theorem1Reason
    c1_degree: int | None = None  # c1(Y).C, curve centers only
    gamma: int | None = None
    decomposable: bool | None = None
    rational_curve_rule: bool = False  # decomposability inferred from genus 0


class TraceStep(BaseModel):
    label: str
    value: Rational | None = None
    conclusion: str = ""

    def render(self) -> str:
        value = f" = {format_rational(self.value)}" if self.value is not None else ""
        tail = f"  => {self.conclusion}" if self.conclusion else ""
        return f"{self.label}{value}{tail}"


class DeductionTrace(BaseModel):
    """An ordered derivation with exact values recomputable from the model."""

    title: str
    notes: list[str] = Field(default_factory=list)
    steps: list[TraceStep] = Field(default_factory=list)
    verdict: str = ""
    consistent: bool = True
    applicable: bool = True
    contradiction: bool = False

    def add(self, label: str, value: Fraction | int | None = None, conclusion: str = "") -> TraceStep:
        step = TraceStep(label=label, value=value, conclusion=conclusion)
        self.steps.append(step)
        return step

    def render(self) -> list[str]:
        lines = [self.title]
        lines.extend(f"  note: {note}" for note in self.notes)
        lines.extend(f"  {step.render()}" for step in self.steps)
        lines.append(f"  verdict: {self.verdict}")
        return lines


class TauRange(BaseModel):
    """{tau : tau <= upper, tau = gamma (mod 2)}; unbounded when not decomposable."""

    gamma: int
    decomposable: bool
    upper: int | None

    @computed_field
    @property
    def parity(self) -> int:
        return self.gamma % 2

    def contains(self, tau: int) -> bool:
        if (tau - self.gamma) % 2:
            return False
        return self.upper is None or tau <= self.upper

    def first(self, count: int = 3) -> list[int]:
        """The largest ``count`` admissible values (bounded ranges only)."""
        if self.upper is None:
            raise ValueError("the range is unbounded above")
        return [self.upper - 2 * k for k in range(count)]

    def describe(self) -> str:
        if self.upper is None:
            return f"tau = {self.parity} (mod 2)"
        return "tau in {" + ", ".join(str(t) for t in self.first()) + ", ...}"


class Remark2Condition(BaseModel):
    """One inequality ``lhs <relation> rhs`` of the generalized line criterion."""

    label: str
    lhs: Rational
    relation: str
    rhs: Rational
    holds: bool

    def render(self) -> str:
        mark = "ok" if self.holds else "FAILS"
        return f"{self.label}: {format_rational(self.lhs)} {self.relation} {format_rational(self.rhs)} [{mark}]"


class Remark2Verdict(BaseModel):
    holds: bool
    gamma: int
    lam: Rational
    conditions: list[Remark2Condition]


class Example3Result(BaseModel):
    c1_degree: int
    applicable: bool
