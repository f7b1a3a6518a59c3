"""Property A across a single blowup: applicability, the tau range and the case analysis."""

from fractions import Fraction
from typing import Literal

from loguru import logger
from threefold_chow import (
    BlowupKind,
    ChowError,
    CurveCenterSpec,
    DivisorClass,
    ThreefoldModel,
    as_fraction,
    center_gamma,
    format_rational,
    intersect,
    mul_divisors,
    pullback,
    require_integer,
    zero_section_class,
)

from .exceptions import PreconditionError
from .property_a import decompose, property_a_report
from .reports import DeductionTrace, TauRange, Theorem1Reason, Theorem1Verdict

NEFNESS_NOTE = "nefness of zeta is asserted by the caller, not verified"


def theorem1_check(
    model_parent: ThreefoldModel,
    center: CurveCenterSpec | Literal["point"] | BlowupKind,
) -> Theorem1Verdict:
    """Decide whether Property A of the parent passes to the blowup along ``center``.

    Points always qualify. A curve qualifies iff c1(Y).C is odd and its
    normal bundle is decomposable; an unset flag on a genus-0 curve counts as
    decomposable.
    """
    if not isinstance(center, CurveCenterSpec):
        if center != BlowupKind.POINT:
            raise PreconditionError(f"unknown center {center!r}")
        return Theorem1Verdict(applicable=True, reason=Theorem1Reason.POINT_CENTER)

    model_parent.require(center.curve)
    degree = require_integer(model_parent.pair(model_parent.c1, center.curve), "c1.C")
    decomposable = center.is_decomposable
    common = dict(
        c1_degree=degree,
        gamma=center_gamma(model_parent, center),
        decomposable=decomposable,
        rational_curve_rule=center.decomposable is None and center.genus == 0,
    )
    if degree % 2 == 0:
        reason = Theorem1Reason.FAILS_PARITY
    elif decomposable is None:
        reason = Theorem1Reason.DECOMPOSABILITY_UNKNOWN
    elif not decomposable:
        reason = Theorem1Reason.NOT_DECOMPOSABLE
    else:
        reason = Theorem1Reason.ODD_AND_DECOMPOSABLE
    return Theorem1Verdict(applicable=reason is Theorem1Reason.ODD_AND_DECOMPOSABLE, reason=reason, **common)


def tau_admissible(gamma: int, decomposable: bool = True) -> TauRange:
    """Admissible normalized-bundle degrees: tau <= 0 with the parity of gamma.

    For odd gamma this is tau <= -1. Without decomposability only the parity
    constraint is known.
    """
    if not decomposable:
        return TauRange(gamma=gamma, decomposable=False, upper=None)
    return TauRange(gamma=gamma, decomposable=True, upper=-(gamma % 2))


def _curve_record(model_after: ThreefoldModel):
    record = model_after.last_record
    if record is None or record.kind is not BlowupKind.CURVE:
        raise PreconditionError("the last blowup of the model must be along a curve")
    return record


def subcase22_certificate(
    model_after: ThreefoldModel,
    xi: DivisorClass,
    alpha: Fraction | int | str,
    tau: int,
) -> DeductionTrace:
    """Evaluate (pi*xi - alpha F).C0 and compare it with alpha tau / 2.

    Args:
        model_after: A model whose last blowup is along a curve C.
        xi: A divisor class of the parent.
        alpha: Positive rational.
        tau: Admissible normalized-bundle degree.

    Raises:
        PreconditionError: If alpha <= 0 or xi.C != alpha gamma / 2.
        ParityError: If tau and gamma have different parity.
    """
    record = _curve_record(model_after)
    alpha = as_fraction(alpha)
    if alpha <= 0:
        raise PreconditionError(f"alpha must be positive, got {format_rational(alpha)}")
    parent = model_after.parent
    gamma = record.gamma
    xi_c = parent.pair(xi, record.center.curve)
    if xi_c != alpha * gamma / 2:
        raise PreconditionError(
            f"xi.C = {format_rational(xi_c)} but alpha*gamma/2 = {format_rational(alpha * gamma / 2)}"
        )

    trace = DeductionTrace(
        title=f"curve blowup #{record.index}, alpha > 0: zeta = pi*({xi}) - {format_rational(alpha)}*{record.exceptional_name}",
        notes=[NEFNESS_NOTE],
    )
    _certificate_steps(trace, model_after, record, xi, alpha, tau)
    return trace


def _certificate_steps(trace, model_after, record, xi, alpha, tau) -> None:
    gamma = record.gamma
    trace.add("gamma = c1(Y).C + 2g - 2", gamma)
    trace.add("xi.C", model_after.parent.pair(xi, record.center.curve), "= alpha*gamma/2 (from zeta^2 = 0)")
    trace.add("tau", tau, tau_admissible(gamma).describe())
    c0 = zero_section_class(model_after, record, tau)
    trace.add("C0 = -F.F + (tau + gamma)/2 f", None, f"C0 = {c0}")
    zeta = pullback(model_after, xi) - alpha * model_after.divisor(record.exceptional_name)
    value = intersect(model_after, (zeta, c0))
    expected = alpha * Fraction(tau, 2)
    if value != expected:
        raise ChowError(f"zeta.C0 = {format_rational(value)} differs from alpha*tau/2 = {format_rational(expected)}")
    trace.add("zeta.C0", value, "= alpha*tau/2")
    if tau < 0:
        trace.contradiction = True
        trace.verdict = "contradiction with nefness: zeta.C0 < 0 for the effective curve C0"
    else:
        trace.verdict = "no contradiction: tau = 0 gives zeta.C0 = 0"
    logger.debug("subcase 2.2 certificate: zeta.C0 = {}", value)


def theorem1_trace(model_after: ThreefoldModel, zeta: DivisorClass, tau: int | None = None) -> DeductionTrace:
    """Run the single-blowup case analysis on a concrete class of ``model_after``.

    Point blowup: zeta^2 = pi*(xi^2) - alpha^2 l, so zeta^2 = 0 forces alpha = 0.
    Curve blowup with alpha = 0: the hypotheses descend to the parent.
    Curve blowup with alpha > 0: zeta^2 = 0 gives xi.C = alpha gamma / 2 and the
    zero section C0 then pairs negatively with zeta whenever tau < 0.
    """
    record = model_after.last_record
    if record is None:
        raise PreconditionError("the model was not produced by a blowup")
    parent = model_after.parent
    xi, alpha = decompose(model_after, zeta)
    report = property_a_report(model_after, zeta)

    trace = DeductionTrace(
        title=f"blowup #{record.index} ({record.kind}): zeta = {zeta}",
        notes=[NEFNESS_NOTE],
    )
    trace.add("alpha", alpha, f"xi = {xi}")
    trace.add("zeta.c1(X)^2", report.zeta_c1_sq)
    trace.add("zeta.c2(X)", report.zeta_c2)
    if report.zeta_sq:
        trace.add("zeta^2", None, report.zeta_sq_text)
        trace.applicable = False
        trace.verdict = "hypotheses not met: zeta^2 != 0"
        return trace
    numeric = "hold" if report.hypotheses_met else "fail"
    trace.add("zeta.c1^2 >= 0 and zeta.c2 <= 0", None, numeric)

    xi_c1_sq = intersect(parent, (xi, mul_divisors(parent, parent.c1, parent.c1)))
    xi_c2 = intersect(parent, (xi, parent.c2))

    if record.kind is BlowupKind.POINT:
        trace.add("l-coefficient of zeta^2", -alpha**2, "zeta^2 = 0 forces alpha = 0")
        expected = xi_c1_sq - 4 * alpha
        trace.add("xi.c1(Y)^2 - 4 alpha", expected)
        trace.consistent = expected == report.zeta_c1_sq and xi_c2 == report.zeta_c2 and alpha == 0
        trace.applicable = report.hypotheses_met
        trace.verdict = (
            "zeta = pi*xi with xi^2 = 0; the hypotheses hold for xi on the parent"
            if report.hypotheses_met
            else "zeta = pi*xi, but the numerical hypotheses fail"
        )
        return trace

    if alpha < 0:
        trace.add("zeta.f", alpha, "nefness needs zeta.f >= 0")
        trace.contradiction = True
        trace.verdict = "contradiction with nefness: alpha < 0"
        return trace

    xi_c = parent.pair(xi, record.center.curve)
    trace.add("xi.C", xi_c)
    if alpha == 0:
        c1_identity = xi_c1_sq - xi_c
        c2_identity = xi_c2 + xi_c
        trace.add("xi.c1(Y)^2 - xi.C", c1_identity, "= zeta.c1(X)^2")
        trace.add("xi.c2(Y) + xi.C", c2_identity, "= zeta.c2(X)")
        trace.consistent = c1_identity == report.zeta_c1_sq and c2_identity == report.zeta_c2
        trace.applicable = report.hypotheses_met
        trace.verdict = (
            "xi.c1(Y)^2 >= xi.C >= 0 and xi.c2(Y) <= -xi.C <= 0; the hypotheses hold on the parent"
            if report.hypotheses_met
            else "zeta = pi*xi, but the numerical hypotheses fail"
        )
        return trace

    # from here on only zeta^2 = 0 and nefness are used
    gamma = record.gamma
    trace.add("f-coefficient of zeta^2", alpha**2 * gamma - 2 * alpha * xi_c, "alpha^2 gamma - 2 alpha xi.C = 0")
    trace.consistent = xi_c == alpha * gamma / 2
    if not trace.consistent:
        trace.verdict = "inconsistent: zeta^2 = 0 but xi.C != alpha gamma / 2"
        return trace

    verdict = theorem1_check(parent, record.center)
    if tau is None:
        tau = record.center.tau
    if tau is not None:
        _certificate_steps(trace, model_after, record, xi, alpha, tau)
        return trace

    admissible = tau_admissible(gamma, bool(verdict.decomposable))
    trace.add("tau", None, f"unknown; {admissible.describe()}")
    trace.add("zeta.C0", None, "= alpha*tau/2")
    if verdict.applicable:
        trace.contradiction = True
        trace.verdict = "contradiction with nefness for every admissible tau (gamma odd gives tau <= -1)"
    else:
        trace.verdict = "contradiction whenever tau < 0; tau = 0 is not excluded"
    return trace
