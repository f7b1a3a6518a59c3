"""Generalized line criterion for point blowups of P^3 followed by curve blowups.

Given disjoint curves D_j on X1 (P^3 blown up at n points with exceptional
divisors E_l), set gamma = sum_j deg (pi1)_* D_j. The criterion asks for
lambda > 0 with

    sum_j E_l.D_j <= lambda  for every l,
    (6 + gamma) / lambda > 11/2,
    (1/2 + 1/lambda) c1(X1).D_j >= (g_j - 1)/2  for every j.
"""

import itertools
from collections.abc import Sequence
from fractions import Fraction
from typing import Any, Self

from pydantic import BaseModel, Field, model_validator
from threefold_chow import (
    BlowupKind,
    CurveCenterSpec,
    Rational,
    ThreefoldModel,
    as_fraction,
    require_integer,
)

from .exceptions import PreconditionError
from .reports import Remark2Condition, Remark2Verdict


class Remark2Inputs(BaseModel):
    """Numerical data of a configuration; also the JSON config format.

    ``{"lines": n}`` expands to the n points and all lines through pairs of them.
    """

    incidence: list[list[int]]  # rows: exceptional divisors E_l, columns: curves D_j
    degrees: list[int]
    genera: list[int]
    c1_degrees: list[int]
    lam: Rational | None = Field(default=None, alias="lambda")

    model_config = {"populate_by_name": True}

    @model_validator(mode="before")
    @classmethod
    def _expand_lines(cls, data: Any) -> Any:
        if isinstance(data, dict) and "lines" in data:
            extra = set(data) - {"lines"}
            if extra:
                raise ValueError(f"'lines' cannot be combined with {sorted(extra)}")
            return line_configuration(int(data["lines"])).model_dump(by_alias=True)
        return data

    @model_validator(mode="after")
    def _check_shapes(self) -> Self:
        m = len(self.degrees)
        if len(self.genera) != m or len(self.c1_degrees) != m:
            raise ValueError("degrees, genera and c1_degrees must have one entry per curve")
        if any(len(row) != m for row in self.incidence):
            raise ValueError(f"every incidence row needs {m} entries")
        if any(v < 0 for row in self.incidence for v in row):
            raise ValueError("incidence numbers E_l.D_j must be non-negative")
        if any(g < 0 for g in self.genera):
            raise ValueError("genera must be non-negative")
        return self

    @property
    def effective_lambda(self) -> Fraction:
        """The given lambda, or the largest row sum (the smallest lambda that fits)."""
        if self.lam is not None:
            return self.lam
        return Fraction(max((sum(row) for row in self.incidence), default=0))


def line_configuration(n: int) -> Remark2Inputs:
    """n points of P^3 in general position and the C(n, 2) lines joining them.

    Each strict transform D_ij meets E_i and E_j once, has degree 1, genus 0 and
    c1(X1).D_ij = 4 - 2 - 2 = 0. Every point lies on n - 1 lines.
    """
    if n < 1:
        raise PreconditionError(f"need at least one point, got {n}")
    pairs = list(itertools.combinations(range(n), 2))
    return Remark2Inputs(
        incidence=[[int(point in pair) for pair in pairs] for point in range(n)],
        degrees=[1] * len(pairs),
        genera=[0] * len(pairs),
        c1_degrees=[0] * len(pairs),
        lam=Fraction(n - 1) if n > 1 else None,
    )


def remark2_inputs_from_model(
    model_x1: ThreefoldModel,
    curves: Sequence[CurveCenterSpec],
    lam: Fraction | int | str | None = None,
) -> Remark2Inputs:
    """Read incidence numbers, degrees and c1-degrees off a point blowup of P^3."""
    if model_x1.base.divisor_basis != ("H",):
        raise PreconditionError("X1 must be a blowup of P^3")
    if any(r.kind is not BlowupKind.POINT for r in model_x1.provenance):
        raise PreconditionError("X1 must be a blowup of P^3 at points only")
    hyperplane = model_x1.divisor("H")
    incidence = [
        [require_integer(model_x1.pair(model_x1.divisor(r.exceptional_name), c.curve), "E.D") for c in curves]
        for r in model_x1.provenance
    ]
    return Remark2Inputs(
        incidence=incidence,
        degrees=[require_integer(model_x1.pair(hyperplane, c.curve), "deg D") for c in curves],
        genera=[c.genus for c in curves],
        c1_degrees=[require_integer(model_x1.pair(model_x1.c1, c.curve), "c1.D") for c in curves],
        lam=as_fraction(lam) if lam is not None else None,
    )


def remark2_check(
    incidence: Sequence[Sequence[int]],
    degrees: Sequence[int],
    genera: Sequence[int],
    c1_degrees: Sequence[int],
    lam: Fraction | int | str,
) -> Remark2Verdict:
    """Evaluate the three conditions exactly.

    Raises:
        PreconditionError: If lambda <= 0.
    """
    lam = as_fraction(lam)
    if lam <= 0:
        raise PreconditionError(f"lambda must be positive, got {lam}")
    inputs = Remark2Inputs(
        incidence=[list(row) for row in incidence],
        degrees=list(degrees),
        genera=list(genera),
        c1_degrees=list(c1_degrees),
        lam=lam,
    )
    gamma = sum(inputs.degrees)
    conditions = []
    for point, row in enumerate(inputs.incidence, start=1):
        total = Fraction(sum(row))
        conditions.append(
            Remark2Condition(label=f"sum_j E{point}.D_j", lhs=total, relation="<=", rhs=lam, holds=total <= lam)
        )
    ratio = (6 + gamma) / lam
    conditions.append(
        Remark2Condition(
            label="(6 + gamma)/lambda", lhs=ratio, relation=">", rhs=Fraction(11, 2), holds=ratio > Fraction(11, 2)
        )
    )
    for j, (c1_d, g) in enumerate(zip(inputs.c1_degrees, inputs.genera), start=1):
        lhs = (Fraction(1, 2) + 1 / lam) * c1_d
        rhs = Fraction(g - 1, 2)
        conditions.append(
            Remark2Condition(label=f"(1/2 + 1/lambda) c1.D_{j}", lhs=lhs, relation=">=", rhs=rhs, holds=lhs >= rhs)
        )
    return Remark2Verdict(
        holds=all(c.holds for c in conditions),
        gamma=gamma,
        lam=lam,
        conditions=conditions,
    )


def remark2_check_inputs(inputs: Remark2Inputs) -> Remark2Verdict:
    return remark2_check(
        inputs.incidence, inputs.degrees, inputs.genera, inputs.c1_degrees, inputs.effective_lambda
    )
