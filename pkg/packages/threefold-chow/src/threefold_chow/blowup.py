"""Base model and blowup constructors.

Every constructor returns a new :class:`ThreefoldModel`; the parent is left
untouched and linked through ``model.parent``. Basis names are generated from
the blowup index: the k-th blowup adds the divisor ``E<k>`` and the curve
``l<k>`` (point center) or ``f<k>`` (curve center).
"""

from fractions import Fraction

from loguru import logger

from .classes import CurveClass, DivisorClass
from .exceptions import CenterSpecError
from .model import BlowupKind, BlowupRecord, CurveCenterSpec, ThreefoldModel
from .rational import require_integer


def p3_model() -> ThreefoldModel:
    """Projective 3-space: H^2 = <H>, H^4 = <L>, c(P^3) = (1 + H)^4."""
    divisors, curves = ("H",), ("L",)
    line = CurveClass.generator(curves, "L")
    return ThreefoldModel(
        divisor_basis=divisors,
        curve_basis=curves,
        pairing=((Fraction(1),),),
        mult=((line,),),
        c1=4 * DivisorClass.generator(divisors, "H"),
        c2=6 * line,
    )


def center_gamma(model: ThreefoldModel, center: CurveCenterSpec) -> int:
    """Degree of the normal bundle of the center: c1(Y).C + 2g - 2.

    Raises:
        IntegralityError: If c1(Y).C is not an integer (the class is not a curve class).
    """
    model.require(center.curve)
    c1_dot_c = require_integer(model.pair(model.c1, center.curve), "c1.C")
    return c1_dot_c + 2 * center.genus - 2


def _pulled_back_products(model: ThreefoldModel, new_curve: str) -> list[list[CurveClass]]:
    # pi*a . pi*b = pi*(a.b)
    return [[entry.extended(new_curve) for entry in row] for row in model.mult]


def _pulled_back_pairing(model: ThreefoldModel) -> list[list[Fraction]]:
    # pi*a . pi*z = a.z and pi*a . (new curve) = 0
    return [list(row) + [Fraction(0)] for row in model.pairing]


def blow_up_point(model: ThreefoldModel) -> ThreefoldModel:
    """Blow up a point: E^2 = -l, pi*a.E = 0, E.l = -1, c1 -> pi*c1 - 2E, c2 -> pi*c2."""
    k = model.depth + 1
    e_name, l_name = f"E{k}", f"l{k}"
    divisors = model.divisor_basis + (e_name,)
    curves = model.curve_basis + (l_name,)
    line = CurveClass.generator(curves, l_name)
    zero = CurveClass.zero(curves)

    mult = _pulled_back_products(model, l_name)
    for row in mult:
        row.append(zero)
    mult.append([zero] * len(model.divisor_basis) + [-line])

    pairing = _pulled_back_pairing(model)
    pairing.append([Fraction(0)] * len(model.curve_basis) + [Fraction(-1)])

    exceptional = DivisorClass.generator(divisors, e_name)
    record = BlowupRecord(
        kind=BlowupKind.POINT,
        index=k,
        exceptional_index=len(divisors) - 1,
        new_curve_index=len(curves) - 1,
        exceptional_name=e_name,
        curve_name=l_name,
    )
    logger.debug("blow-up #{}: point, new basis names {} / {}", k, e_name, l_name)
    return ThreefoldModel(
        divisor_basis=divisors,
        curve_basis=curves,
        pairing=tuple(tuple(row) for row in pairing),
        mult=tuple(tuple(row) for row in mult),
        c1=model.c1.extended(e_name) - 2 * exceptional,
        c2=model.c2.extended(l_name),
        provenance=model.provenance + (record,),
        parent=model,
    )


def blow_up_curve(
    model: ThreefoldModel,
    center: CurveCenterSpec,
    mult_with_prior: tuple[int, ...] = (),
) -> ThreefoldModel:
    """Blow up a smooth curve ``C``.

    Rules: ``pi*a.F = (a.C) f``, ``F^2 = -pi*C + gamma f``, ``F.f = -1``,
    ``pi*a.f = 0``, ``F.pi*z = 0``; ``c1 -> pi*c1 - F`` and
    ``c2 -> pi*c2 + pi*C - (c1.C) f``.

    Args:
        model: The parent model.
        center: The curve, as a class of ``model``.
        mult_with_prior: Intersection multiplicities of the center with earlier
            centers. Recorded for bookkeeping only.

    Raises:
        ModelMismatchError: If the center class does not belong to ``model``.
        IntegralityError: If c1.C is not an integer.
        CenterSpecError: If tau is positive.
        ParityError: If tau and gamma have different parity.
    """
    gamma = center_gamma(model, center)
    center.check_tau(gamma)
    if any(isinstance(m, bool) or not isinstance(m, int) or m < 0 for m in mult_with_prior):
        raise CenterSpecError(f"multiplicities must be non-negative integers, got {mult_with_prior!r}")

    k = model.depth + 1
    e_name, f_name = f"E{k}", f"f{k}"
    divisors = model.divisor_basis + (e_name,)
    curves = model.curve_basis + (f_name,)
    fiber = CurveClass.generator(curves, f_name)
    pulled_center = center.curve.extended(f_name)

    mult = _pulled_back_products(model, f_name)
    last_row = []
    for i, name in enumerate(model.divisor_basis):
        a_dot_c = model.pair(model.divisor(name), center.curve)
        mult[i].append(a_dot_c * fiber)
        last_row.append(a_dot_c * fiber)
    last_row.append(-pulled_center + gamma * fiber)
    mult.append(last_row)

    pairing = _pulled_back_pairing(model)
    pairing.append([Fraction(0)] * len(model.curve_basis) + [Fraction(-1)])

    c1_dot_c = model.pair(model.c1, center.curve)
    exceptional = DivisorClass.generator(divisors, e_name)
    record = BlowupRecord(
        kind=BlowupKind.CURVE,
        index=k,
        exceptional_index=len(divisors) - 1,
        new_curve_index=len(curves) - 1,
        exceptional_name=e_name,
        curve_name=f_name,
        center=center,
        gamma=gamma,
        mult_with_prior=tuple(mult_with_prior),
    )
    logger.debug(
        "blow-up #{}: curve {} (genus {}, gamma {}), new basis names {} / {}",
        k, center.curve, center.genus, gamma, e_name, f_name,
    )
    return ThreefoldModel(
        divisor_basis=divisors,
        curve_basis=curves,
        pairing=tuple(tuple(row) for row in pairing),
        mult=tuple(tuple(row) for row in mult),
        c1=model.c1.extended(e_name) - exceptional,
        c2=model.c2.extended(f_name) + pulled_center - c1_dot_c * fiber,
        provenance=model.provenance + (record,),
        parent=model,
    )
