"""Fourier-Motzkin elimination over exact rationals.

Equalities are used for substitution before any inequality is combined.
Strict inequalities stay strict: a combination is strict as soon as one of
its two parents is.
"""

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from loguru import logger

from .system import Constraint, ConstraintError, ConstraintSystem, LinExpr, Relation


@dataclass(frozen=True)
class _Tracked:
    """An inequality together with the set of input inequalities it was derived from."""

    constraint: Constraint
    history: frozenset[int]


def _substitution(constraint: Constraint, var: str) -> LinExpr:
    # a*var + rest = 0  =>  var = -rest / a
    a = constraint.expr.coefficient(var)
    rest = constraint.expr.substitute(var, LinExpr())
    return -rest / a


def _combine(pos: Constraint, neg: Constraint, var: str) -> Constraint:
    p, n = pos.expr.coefficient(var), -neg.expr.coefficient(var)
    expr = pos.expr / p + neg.expr / n
    relation = Relation.GT if pos.is_strict or neg.is_strict else Relation.GE
    return Constraint(expr, relation)


def _prune(constraints: Iterable[Constraint]) -> list[Constraint]:
    """Normalize, deduplicate and keep only the tightest of parallel inequalities."""
    equalities: dict[LinExpr, Constraint] = {}
    tightest: dict[tuple[tuple[str, Fraction], ...], Constraint] = {}
    ground: dict[Constraint, None] = {}
    for constraint in constraints:
        c = constraint.normalized()
        if c.is_ground:
            ground.setdefault(c)
        elif c.relation is Relation.EQ:
            equalities.setdefault(c.expr, c)
        else:
            key = c.expr.terms
            best = tightest.get(key)
            if best is None or _tighter(c, best):
                tightest[key] = c
    return list(equalities.values()) + list(tightest.values()) + list(ground)


def _tighter(a: Constraint, b: Constraint) -> bool:
    # same variable part; smaller constant is tighter, strict beats non-strict on ties
    if a.expr.constant != b.expr.constant:
        return a.expr.constant < b.expr.constant
    return a.is_strict and not b.is_strict


def eliminate_variable(system: ConstraintSystem, var: str) -> ConstraintSystem:
    """Return a system without ``var`` that is feasible iff ``system`` is.

    An equality mentioning ``var`` is substituted into every other constraint;
    otherwise every positive/negative pair of inequalities is combined. Ground
    constraints are kept (deduplicated) so the result can be inspected.
    """
    if var not in system.variables:
        logger.warning("eliminating {} which does not occur in the system", var)
        return system

    for i, constraint in enumerate(system.constraints):
        if constraint.relation is Relation.EQ and constraint.expr.coefficient(var):
            replacement = _substitution(constraint, var)
            rest = system.constraints[:i] + system.constraints[i + 1:]
            logger.debug("substituting {} = {}", var, replacement)
            return ConstraintSystem(tuple(_prune(c.substitute(var, replacement) for c in rest)))

    positive, negative, untouched = [], [], []
    for constraint in system.constraints:
        coeff = constraint.expr.coefficient(var)
        if coeff > 0:
            positive.append(constraint)
        elif coeff < 0:
            negative.append(constraint)
        else:
            untouched.append(constraint)
    combined = [_combine(p, n, var) for p in positive for n in negative]
    logger.debug(
        "eliminating {}: {} x {} inequalities -> {} combinations",
        var, len(positive), len(negative), len(combined),
    )
    return ConstraintSystem(tuple(_prune(untouched + combined)))


def _substitute_equalities(system: ConstraintSystem) -> list[Constraint] | None:
    """Use every equality to remove one variable; ``None`` on a false ground constraint."""
    pending = _prune(system.constraints)
    while True:
        for c in pending:
            if c.is_ground and not c.holds():
                return None
        eq = next((c for c in pending if c.relation is Relation.EQ and not c.is_ground), None)
        if eq is None:
            return [c for c in pending if not c.is_ground]
        var = eq.expr.variables[0]
        replacement = _substitution(eq, var)
        pending = _prune(c.substitute(var, replacement) for c in pending if c is not eq)


def _pick_variable(rows: list[_Tracked]) -> str:
    """The variable whose elimination creates the fewest new inequalities."""
    counts: dict[str, list[int]] = {}
    for row in rows:
        for name, coeff in row.constraint.expr.terms:
            counts.setdefault(name, [0, 0])[0 if coeff > 0 else 1] += 1
    return min(counts, key=lambda v: (counts[v][0] * counts[v][1] - sum(counts[v]), v))


def _fm_tracked(rows: list[_Tracked], var: str, eliminated: int) -> list[_Tracked]:
    positive = [r for r in rows if r.constraint.expr.coefficient(var) > 0]
    negative = [r for r in rows if r.constraint.expr.coefficient(var) < 0]
    result = [r for r in rows if not r.constraint.expr.coefficient(var)]
    dropped = 0
    for p in positive:
        for n in negative:
            history = p.history | n.history
            combined = _combine(p.constraint, n.constraint, var)
            # Chernikov: after k eliminations a history larger than k + 1 is redundant
            if not combined.is_strict and len(history) > eliminated + 1:
                dropped += 1
                continue
            result.append(_Tracked(combined.normalized(), history))
    if dropped:
        logger.debug("dropped {} redundant combinations while eliminating {}", dropped, var)
    return _prune_tracked(result)


def _prune_tracked(rows: list[_Tracked]) -> list[_Tracked]:
    """Drop a row only when a kept row implies it with the same strictness.

    The kept row must also have a history contained in the dropped one;
    Chernikov's test stays sound only under that condition.
    """
    groups: dict[tuple[tuple[tuple[str, Fraction], ...], bool], list[_Tracked]] = {}
    for row in rows:
        groups.setdefault((row.constraint.expr.terms, row.constraint.is_strict), []).append(row)
    kept: list[_Tracked] = []
    for group in groups.values():
        survivors: list[_Tracked] = []
        for row in sorted(group, key=lambda r: (r.constraint.expr.constant, len(r.history))):
            if not any(s.history <= row.history for s in survivors):
                survivors.append(row)
        kept.extend(survivors)
    return kept


def is_feasible(system: ConstraintSystem) -> bool:
    """True iff some rational assignment satisfies every constraint."""
    remaining = _substitute_equalities(system)
    if remaining is None:
        return False
    rows = [_Tracked(c, frozenset({i})) for i, c in enumerate(remaining)]
    eliminated = 0
    while True:
        for row in rows:
            if row.constraint.is_ground and not row.constraint.holds():
                logger.debug("infeasible: {}", row.constraint)
                return False
        rows = [r for r in rows if not r.constraint.is_ground]
        if not rows:
            return True
        var = _pick_variable(rows)
        eliminated += 1
        rows = _fm_tracked(rows, var, eliminated)


def project(system: ConstraintSystem, keep: Iterable[str]) -> ConstraintSystem:
    """Eliminate every variable outside ``keep``."""
    keep = set(keep)
    result = system
    for var in system.variables:
        if var not in keep and var in result.variables:
            result = eliminate_variable(result, var)
    return result


def forces_zero(system: ConstraintSystem, var: str) -> bool:
    """True iff ``var`` vanishes in every solution of the homogeneous ``system``.

    By homogeneity this is infeasibility of ``system + {var = 1}`` (and of
    ``var = -1`` when the system does not already bound ``var`` below by 0).

    Raises:
        ConstraintError: If the system has a non-zero constant term.
    """
    if not system.is_homogeneous:
        raise ConstraintError("forces_zero needs a homogeneous system")
    if var not in system.variables:
        logger.warning("{} does not occur in the system, so it is free", var)
        return False
    for value in (1, -1):
        pinned = system.extended(Constraint.eq(LinExpr.var(var), LinExpr.of(constant=value)))
        if is_feasible(pinned):
            return False
    return True
