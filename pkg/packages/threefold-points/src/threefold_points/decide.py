"""Deciding deg = 0 for the n-point configuration by exact elimination."""

from fractions import Fraction
from math import comb

from loguru import logger
from threefold_feasibility import (
    Constraint,
    ConstraintSystem,
    LinExpr,
    forces_zero,
    is_feasible,
    project,
)
from threefold_property import DeductionTrace, PreconditionError

from .config import DEG, CaseLabel, Theorem3Config
from .constraints import (
    build_constraints,
    c1_squared_constraint,
    c2_constraint,
    case_constraints,
    raw_tuple_constraints,
    sign_constraints,
    sum_bound_constraint,
)
from .reports import AveragingCertificate, DegreeDecision, RedundancyReport

S_BETA = "S_beta"


def _degenerate(config: Theorem3Config) -> DegreeDecision:
    system = ConstraintSystem.of(
        [
            Constraint.eq(6 * LinExpr.var(DEG), label="c2 identity without lines"),
            *sign_constraints(config),
        ]
    )
    forced = forces_zero(system, DEG)
    trace = DeductionTrace(title="n = 1: one point, no lines")
    trace.add("zeta.c2(X)", None, "= xi.c2(X1) = 6 deg")
    trace.add("coefficient of deg", 6, "6 deg = 0")
    trace.verdict = "deg = 0 is forced" if forced else "deg = 0 is not forced"
    return DegreeDecision(
        n=1,
        forced=forced,
        case=CaseLabel.DEGENERATE,
        system=system.to_text().splitlines(),
        trace=trace,
    )


def decide_deg_zero(n: int, raw: bool = False) -> DegreeDecision:
    """Assemble the identities and the case bound, then ask whether deg vanishes.

    Args:
        n: Number of points, at least 1.
        raw: Use the per-six-points constraints for case 2.
    """
    config = Theorem3Config(n)
    if n == 1:
        return _degenerate(config)

    rule = config.case
    system = build_constraints(n).extended(*case_constraints(n, raw=raw))
    forced = forces_zero(system, DEG)
    logger.debug("n = {}: case {}, forced = {}", n, rule.label, forced)

    lines = config.line_count
    ratio = Fraction(6 + lines, n - 1)
    trace = DeductionTrace(
        title=f"n = {n}: {lines} lines, case {rule.label}",
        notes=[
            "c2(P^3) = 6L; a coefficient of 16 would contradict zeta.c2 = 6 deg - (n-1) sum beta",
            f"case {rule.label}: {rule.source}",
        ],
    )
    trace.add("zeta.c2(X) = (6 + C(n,2)) deg - (n-1) sum beta", None, "= 0")
    trace.add("sum beta / deg", ratio, "from the c2 identity")
    trace.add("zeta.c1(X)^2 on the c2 locus", None, "22 deg - 4 sum beta - 2 S_alpha = 0")
    trace.add("upper bound from S_alpha >= 0", Fraction(11, 2), "sum beta <= 11/2 deg")
    bound = rule.bound(n)
    if bound is not None:
        trace.add(f"case {rule.label} bound", bound, f"sum beta <= {bound} deg")
    effective = min(Fraction(11, 2), bound) if bound is not None else Fraction(11, 2)
    trace.add("ratio exceeds the tightest bound", None, f"{ratio} > {effective}" if ratio > effective else f"{ratio} <= {effective}")
    trace.consistent = forced == (ratio > effective)
    trace.verdict = "deg = 0 is forced" if forced else "deg = 0 is not forced"
    return DegreeDecision(
        n=n,
        forced=forced,
        case=rule.label,
        raw=raw,
        system=system.to_text().splitlines(),
        trace=trace,
    )


def averaging_certificate(n: int) -> AveragingCertificate:
    """Average the six-point constraints with weight 1/C(n-1,5).

    Each beta_l occurs in C(n-1,5) of the C(n,6) constraints, so the average is
    (n/2) deg - sum beta >= 0. For n in {6, 7} the FM projection of the raw
    constraints onto (deg, S_beta) is computed and checked to imply the bound.

    Raises:
        PreconditionError: Unless 6 <= n <= 9.
    """
    if not 6 <= n <= 9:
        raise PreconditionError(f"the averaging certificate covers 6 <= n <= 9, got {n}")
    config = Theorem3Config(n)
    raw = raw_tuple_constraints(n)
    weight = Fraction(1, comb(n - 1, 5))
    combination = LinExpr()
    for constraint in raw:
        combination = combination + constraint.expr * weight
    averaged = case_constraints(n)[0].expr
    certificate = AveragingCertificate(
        n=n,
        tuples=len(raw),
        weight=weight,
        combination=combination.format(),
        averaged=averaged.format(),
        matches=combination == averaged,
    )
    if n <= 7:
        s_beta = LinExpr.var(S_BETA)
        system = ConstraintSystem.of(
            [Constraint.eq(s_beta, LinExpr.total(config.betas), label="S_beta"), *raw, *sign_constraints(config)[: n + 1]]
        )
        projected = project(system, [DEG, S_BETA])
        violated = Constraint.gt(s_beta, Fraction(n, 2) * LinExpr.var(DEG))
        certificate.projection = projected.to_text().splitlines()
        certificate.projection_implies_bound = not is_feasible(projected.extended(violated))
    return certificate


def redundancy_check(n: int) -> RedundancyReport:
    """Compare the c1^2 identity with the weaker 11/2 bound it implies."""
    config = Theorem3Config(n)
    if n < 2:
        raise PreconditionError("the comparison needs at least two points")
    signs = sign_constraints(config)
    c2 = c2_constraint(config)
    c1_sq = c1_squared_constraint(config)
    bound = sum_bound_constraint(config)
    violated = Constraint.gt(-bound.expr)
    implied = not is_feasible(ConstraintSystem.of([c1_sq, *signs, violated]))
    with_c1_sq = forces_zero(ConstraintSystem.of([c2, c1_sq, *signs]), DEG)
    with_bound = forces_zero(ConstraintSystem.of([c2, bound, *signs]), DEG)
    return RedundancyReport(
        n=n,
        bound_implied=implied,
        forced_with_c1_squared=with_c1_sq,
        forced_with_sum_bound=with_bound,
    )
