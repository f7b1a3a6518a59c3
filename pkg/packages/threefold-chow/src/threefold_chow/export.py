"""Serializable model summaries (text and JSON)."""

import itertools

from pydantic import BaseModel, Field

from .model import BlowupKind, ThreefoldModel
from .operations import intersect
from .rational import Rational, format_rational


class BlowupSummary(BaseModel):
    """One provenance record."""

    index: int
    kind: BlowupKind
    exceptional: str
    curve: str
    center: str | None = None  # curve class of the center in the parent
    genus: int | None = None
    decomposable: bool | None = None
    gamma: int | None = None
    tau: int | None = None
    mult_with_prior: list[int] = Field(default_factory=list)


class ModelSummary(BaseModel):
    """Everything needed to rebuild the intersection tables of a model."""

    divisor_basis: list[str]
    curve_basis: list[str]
    pairing: list[list[Rational]]
    products: dict[str, str]  # "A*B" -> curve class, non-zero entries only
    c1: str
    c2: str
    c1_cubed: Rational
    c1_c2: Rational
    provenance: list[BlowupSummary] = Field(default_factory=list)


def describe_model(model: ThreefoldModel) -> ModelSummary:
    """Summarize ``model`` for reports."""
    products = {}
    for i, j in itertools.combinations_with_replacement(range(len(model.divisor_basis)), 2):
        entry = model.mult[i][j]
        if not entry.is_zero():
            products[f"{model.divisor_basis[i]}*{model.divisor_basis[j]}"] = entry.format()

    provenance = []
    for record in model.provenance:
        center = record.center
        provenance.append(
            BlowupSummary(
                index=record.index,
                kind=record.kind,
                exceptional=record.exceptional_name,
                curve=record.curve_name,
                center=center.curve.format() if center else None,
                genus=center.genus if center else None,
                decomposable=center.is_decomposable if center else None,
                gamma=record.gamma,
                tau=center.tau if center else None,
                mult_with_prior=list(record.mult_with_prior),
            )
        )

    return ModelSummary(
        divisor_basis=list(model.divisor_basis),
        curve_basis=list(model.curve_basis),
        pairing=[list(row) for row in model.pairing],
        products=products,
        c1=model.c1.format(),
        c2=model.c2.format(),
        c1_cubed=intersect(model, (model.c1, model.c1, model.c1)),
        c1_c2=intersect(model, (model.c1, model.c2)),
        provenance=provenance,
    )


def render_model(summary: ModelSummary) -> list[str]:
    """Text rendering of a summary, one line per entry."""
    lines = [
        f"divisors: {' '.join(summary.divisor_basis)}",
        f"curves: {' '.join(summary.curve_basis)}",
    ]
    for record in summary.provenance:
        if record.kind is BlowupKind.POINT:
            lines.append(f"blowup {record.index}: point -> {record.exceptional}, {record.curve}")
        else:
            extra = f" tau={record.tau}" if record.tau is not None else ""
            lines.append(
                f"blowup {record.index}: curve {record.center} genus={record.genus} "
                f"gamma={record.gamma}{extra} -> {record.exceptional}, {record.curve}"
            )
    for key, value in summary.products.items():
        lines.append(f"{key} = {value}")
    lines.append(f"c1 = {summary.c1}")
    lines.append(f"c2 = {summary.c2}")
    lines.append(f"c1^3 = {format_rational(summary.c1_cubed)}")
    lines.append(f"c1.c2 = {format_rational(summary.c1_c2)}")
    return lines
