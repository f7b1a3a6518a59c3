"""The c2 chain for a point blowup X1 -> X0 followed by disjoint curve blowups X2 -> X1."""

from collections.abc import Sequence
from fractions import Fraction
from typing import Literal

from loguru import logger
from threefold_chow import (
    BlowupKind,
    CurveCenterSpec,
    DivisorClass,
    ThreefoldModel,
    as_fraction,
    blow_up_curve,
    format_rational,
    intersect,
    mul_divisors,
    pushforward,
    require_integer,
    transfer,
)

from .exceptions import PreconditionError
from .reports import DeductionTrace


def _is_p3(model: ThreefoldModel) -> bool:
    return model.divisor_basis == ("H",) and model.c2 == 6 * model.curve("L")


def build_x2(model_x1: ThreefoldModel, curves: Sequence[CurveCenterSpec]) -> ThreefoldModel:
    """Blow up the (pairwise disjoint) curves one after the other."""
    model = model_x1
    for center in curves:
        model = blow_up_curve(
            model,
            CurveCenterSpec(
                curve=transfer(model, center.curve),
                genus=center.genus,
                decomposable=center.decomposable,
                tau=center.tau,
            ),
        )
    return model


def theorem2_chain(
    model_x1: ThreefoldModel,
    curves: Sequence[CurveCenterSpec],
    xi: DivisorClass,
    alphas: Sequence[Fraction | int | str],
    part: Literal[1, 2] = 1,
    c2_positive_on_base: bool | None = None,
) -> DeductionTrace:
    """Evaluate 0 >= zeta.c2(X2) = xi.c2(X1) + sum_j (xi.D_j - alpha_j c1(X1).D_j).

    Args:
        model_x1: A model obtained from its base by point blowups only.
        curves: The curves D_j as classes of ``model_x1`` (disjointness is asserted).
        xi: zeta = pi2*xi - sum_j alpha_j F_j.
        alphas: Non-negative rationals, one per curve.
        part: 1 uses the dichotomy xi.D_j = alpha_j c1.D_j = alpha_j (2g_j - 2);
            2 requires c1(X1).D_j <= 2g_j - 2 for every j.
        c2_positive_on_base: Assertion that c2(X0) pairs positively with every
            non-zero movable class. ``None`` auto-asserts it for P^3.

    Returns:
        A trace; a failed genus condition in part 2 yields ``applicable=False``.
    """
    if part not in (1, 2):
        raise PreconditionError(f"part must be 1 or 2, got {part!r}")
    if any(r.kind is not BlowupKind.POINT for r in model_x1.provenance):
        raise PreconditionError("X1 must be a blowup of X0 at points only")
    alphas = [as_fraction(a) for a in alphas]
    if len(alphas) != len(curves):
        raise PreconditionError(f"{len(curves)} curves but {len(alphas)} coefficients")
    if any(a < 0 for a in alphas):
        raise PreconditionError("the coefficients alpha_j must be non-negative")
    model_x1.require(xi)
    base = model_x1.base
    if c2_positive_on_base is None:
        c2_positive_on_base = _is_p3(base)

    trace = DeductionTrace(
        title=f"X2 -> X1 -> X0 chain, part {part}: zeta = pi2*({xi}) - sum alpha_j F_j",
        notes=[
            "hypotheses consumed: zeta^2 = 0, zeta.c1(X2) = 0, zeta.c2(X2) <= 0",
            "D_j' is a section of F_j over D_j; only zeta.D_j' >= 0 is used",
            "nefness of zeta and disjointness of the D_j are asserted by the caller",
        ],
    )

    terms: list[Fraction] = []
    for j, (center, alpha) in enumerate(zip(curves, alphas), start=1):
        model_x1.require(center.curve)
        xi_d = model_x1.pair(xi, center.curve)
        c1_d = require_integer(model_x1.pair(model_x1.c1, center.curve), f"c1(X1).D_{j}")
        bound = 2 * center.genus - 2
        term = xi_d - alpha * c1_d
        terms.append(term)

        if part == 2 and c1_d > bound:
            trace.add(f"c1(X1).D_{j}", c1_d, f"> 2g_{j} - 2 = {bound}")
            trace.applicable = False
            trace.verdict = f"inapplicable: c1(X1).D_{j} = {c1_d} exceeds 2g_{j} - 2 = {bound}"
            return trace

        if alpha == 0:
            ok = xi_d >= 0
            branch = f"alpha_{j} = 0: xi.D_{j} = zeta.D_{j}' >= 0"
        elif part == 1:
            ok = xi_d == alpha * c1_d == alpha * bound
            branch = f"xi.D_{j} = alpha_{j} c1.D_{j} = alpha_{j} (2g_{j} - 2)"
        else:
            ok = term == alpha / 2 * (bound - c1_d)
            branch = f"term = alpha_{j}/2 ((2g_{j} - 2) - c1.D_{j}) >= 0"
        trace.add(f"xi.D_{j} - alpha_{j} c1(X1).D_{j}", term, branch if ok else f"violates {branch}")
        trace.consistent &= ok

    xi_c2 = intersect(model_x1, (xi, model_x1.c2))
    closed_form = xi_c2 + sum(terms, Fraction(0))
    trace.add("xi.c2(X1)", xi_c2)
    trace.add("xi.c2(X1) + sum of terms", closed_form)

    model_x2 = build_x2(model_x1, curves)
    zeta = transfer(model_x2, xi)
    for record, alpha in zip(model_x2.provenance[model_x1.depth:], alphas):
        zeta = zeta - alpha * model_x2.divisor(record.exceptional_name)
    zeta_c2 = intersect(model_x2, (zeta, model_x2.c2))
    zeta_c1 = mul_divisors(model_x2, zeta, model_x2.c1)
    trace.add("zeta.c2(X2)", zeta_c2, "matches the closed form" if zeta_c2 == closed_form else "MISMATCH")
    trace.add("zeta^2", None, str(mul_divisors(model_x2, zeta, zeta)))
    trace.add("zeta.c1(X2)", None, str(zeta_c1))
    trace.add("zeta.c1(X2)^2", intersect(model_x2, (zeta, model_x2.c1, model_x2.c1)))
    trace.consistent &= zeta_c2 == closed_form

    pushed = xi
    node = model_x1
    while node.parent is not None:
        pushed = pushforward(node, pushed)
        node = node.parent
    trace.add("(pi1)_* xi", None, str(pushed))

    if not trace.consistent:
        trace.verdict = "inconsistent: some term violates the dichotomy, so zeta cannot satisfy the hypotheses"
    elif all(t >= 0 for t in terms):
        trace.verdict = "every term is non-negative, so xi.c2(X1) <= 0 is forced"
        if c2_positive_on_base:
            trace.verdict += "; c2(X0) is positive on movable classes, so (pi1)_* xi = 0"
            if xi_c2 > 0:
                trace.contradiction = True
                trace.verdict += f" (here xi.c2(X1) = {format_rational(xi_c2)} > 0: no such nef zeta)"
    else:
        trace.verdict = "some term is negative; no conclusion"
    logger.debug("theorem 2 chain: terms {} closed form {}", terms, closed_form)
    return trace
