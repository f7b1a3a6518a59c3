"""Products, pullback, pushforward and derived curve classes."""

from collections.abc import Sequence
from fractions import Fraction
from typing import TypeVar

from loguru import logger

from .classes import CurveClass, DivisorClass
from .exceptions import CenterSpecError, ChowError, DegreeError, ModelMismatchError, ParityError
from .model import BlowupKind, BlowupRecord, ThreefoldModel

_C = TypeVar("_C", DivisorClass, CurveClass)


def mul_divisors(model: ThreefoldModel, a: DivisorClass, b: DivisorClass) -> CurveClass:
    """Cup product of two divisor classes."""
    return model.mul(a, b)


def intersect(model: ThreefoldModel, factors: Sequence[DivisorClass | CurveClass]) -> Fraction:
    """Evaluate a product of total degree 6: three divisors, or a divisor and a curve.

    Raises:
        DegreeError: For any other combination of factors.
        ModelMismatchError: If a factor belongs to another model.
    """
    divisors = [x for x in factors if isinstance(x, DivisorClass)]
    curves = [x for x in factors if isinstance(x, CurveClass)]
    if len(divisors) + len(curves) != len(factors):
        raise DegreeError("factors must be divisor or curve classes")
    total = sum(x.degree for x in factors)
    if total != 6 or len(curves) > 1:
        kinds = ", ".join(type(x).__name__ for x in factors) or "nothing"
        raise DegreeError(f"product of {kinds} has degree {total}, expected 6")
    if curves:
        return model.pair(divisors[0], curves[0])
    a, b, c = divisors
    return model.pair(c, model.mul(a, b))


def _child_record(model_after: ThreefoldModel) -> BlowupRecord:
    record = model_after.last_record
    if record is None or model_after.parent is None:
        raise ModelMismatchError("model was not produced by a blowup")
    return record


def pullback(model_after: ThreefoldModel, x: _C) -> _C:
    """pi* along the last blowup of ``model_after``: new coordinate set to 0."""
    record = _child_record(model_after)
    model_after.parent.require(x)
    name = record.exceptional_name if isinstance(x, DivisorClass) else record.curve_name
    return x.extended(name)


def pushforward(model_after: ThreefoldModel, x: _C) -> _C:
    """pi_* along the last blowup of ``model_after``: the new coordinate is dropped."""
    _child_record(model_after)
    model_after.require(x)
    return x.truncated()


def transfer(model: ThreefoldModel, x: _C) -> _C:
    """Pull ``x`` back from whichever ancestor of ``model`` owns it.

    Raises:
        ModelMismatchError: If no model in the chain owns ``x``.
    """
    chain = model.ancestors()
    for depth, ancestor in enumerate(chain):
        if ancestor.owns(x):
            break
    else:
        raise ModelMismatchError(f"{x} does not belong to this model or any of its ancestors")
    for child in reversed(chain[:depth]):
        x = pullback(child, x)
    return x


def strict_transform(model_after: ThreefoldModel, z: CurveClass, m: int) -> CurveClass:
    """Class of the strict transform: pi*z - m * (l or f of the last blowup).

    ``m`` is the multiplicity of the curve at the blown-up point, or the number
    of intersection points with the blown-up curve counted with multiplicity.
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 0:
        raise ValueError(f"multiplicity must be a non-negative integer, got {m!r}")
    record = _child_record(model_after)
    return pullback(model_after, z) - m * model_after.curve(record.curve_name)


def zero_section_class(model: ThreefoldModel, record: BlowupRecord, tau: int) -> CurveClass:
    """The zero section C0 = -F.F + (tau + gamma)/2 f of the exceptional ruled surface.

    In coordinates this is pi*C + (tau - gamma)/2 f.

    Raises:
        CenterSpecError: If ``record`` is a point blowup, or ``tau`` > 0.
        ParityError: If tau and gamma have different parity.
    """
    if record.kind is not BlowupKind.CURVE:
        raise CenterSpecError("the zero section only exists for a curve blowup")
    if isinstance(tau, bool) or not isinstance(tau, int):
        raise CenterSpecError(f"tau must be an integer, got {tau!r}")
    if tau > 0:
        raise CenterSpecError(f"tau must be <= 0, got {tau}")
    if (tau - record.gamma) % 2:
        raise ParityError(
            f"tau={tau} and gamma={record.gamma} have different parity; C0 would not be integral"
        )
    exceptional = model.divisor(record.exceptional_name)
    fiber = model.curve(record.curve_name)
    c0 = -model.mul(exceptional, exceptional) + Fraction(tau + record.gamma, 2) * fiber

    if model.last_record == record:
        # a section meets every fiber once, so it maps isomorphically onto C
        if pushforward(model, c0) != record.center.curve:
            raise ChowError(f"zero section {c0} does not push forward to the center {record.center.curve}")
    logger.debug("C0 for blow-up #{} with tau={}: {}", record.index, tau, c0)
    return c0
