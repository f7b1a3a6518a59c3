"""Property A values for a single class."""

from fractions import Fraction

from threefold_chow import (
    DivisorClass,
    ThreefoldModel,
    intersect,
    mul_divisors,
    pushforward,
)

from .exceptions import PreconditionError
from .reports import PropertyAReport


def property_a_report(model: ThreefoldModel, zeta: DivisorClass) -> PropertyAReport:
    """zeta^2, zeta.c1(X)^2 and zeta.c2(X), with the Property A conjunction.

    Raises:
        ModelMismatchError: If ``zeta`` does not belong to ``model``.
    """
    square = mul_divisors(model, zeta, zeta)
    c1_sq = mul_divisors(model, model.c1, model.c1)
    return PropertyAReport(
        zeta=zeta.format(),
        zeta_sq=square.as_dict(),
        zeta_c1_sq=intersect(model, (zeta, c1_sq)),
        zeta_c2=intersect(model, (zeta, model.c2)),
    )


def decompose(model_after: ThreefoldModel, zeta: DivisorClass) -> tuple[DivisorClass, Fraction]:
    """Split zeta = pi*xi - alpha E along the last blowup of ``model_after``."""
    record = model_after.last_record
    if record is None:
        raise PreconditionError("the model was not produced by a blowup")
    alpha = -zeta[record.exceptional_name]
    return pushforward(model_after, zeta), alpha
