"""Linear constraints on (deg, beta, alpha) for the n-point/all-lines configuration.

zeta = pi*xi - sum alpha_ij F_ij with xi = deg H - sum beta_l E_l on the point
blowup. With xi.D_ij = deg - beta_i - beta_j and c1.D_ij = 0:

    zeta.c2(X)   = (6 + C(n,2)) deg - (n-1) sum beta
    zeta.c1(X)^2 = (16 - C(n,2)) deg + (n-5) sum beta - 2 sum alpha
"""

import itertools
from fractions import Fraction

from loguru import logger
from threefold_feasibility import Constraint, ConstraintSystem, LinExpr
from threefold_property import PreconditionError

from .config import DEG, S_ALPHA, Theorem3Config

_DEG = LinExpr.var(DEG)


def _alpha_names(config: Theorem3Config, alpha_pairs: bool) -> list[str]:
    if alpha_pairs:
        return [f"a{i}_{j}" for i, j in config.pairs]
    return [S_ALPHA]


def c2_constraint(config: Theorem3Config) -> Constraint:
    """(6 + C(n,2)) deg = (n-1) sum beta, from zeta.c2(X) = 0."""
    n = config.n
    return Constraint.eq(
        (6 + config.line_count) * _DEG,
        LinExpr.total(config.betas, n - 1),
        label="c2 identity",
    )


def c1_squared_constraint(config: Theorem3Config, alpha_pairs: bool = False) -> Constraint:
    """22 deg = 4 sum beta + 2 sum alpha, from zeta.c1(X)^2 = 0 on the c2 locus."""
    return Constraint.eq(
        22 * _DEG,
        LinExpr.total(config.betas, 4) + LinExpr.total(_alpha_names(config, alpha_pairs), 2),
        label="c1^2 identity",
    )


def sum_bound_constraint(config: Theorem3Config) -> Constraint:
    """(11/2) deg >= sum beta; implied by the c1^2 identity and alpha >= 0."""
    return Constraint.ge(Fraction(11, 2) * _DEG, LinExpr.total(config.betas), label="sum bound 11/2")


def sign_constraints(config: Theorem3Config, alpha_pairs: bool = False) -> list[Constraint]:
    names = [DEG, *config.betas]
    if config.n > 1:
        names.extend(_alpha_names(config, alpha_pairs))
    return [Constraint.ge(LinExpr.var(name), label=f"{name} >= 0") for name in names]


def build_constraints(n: int, alpha_pairs: bool = False) -> ConstraintSystem:
    """Both identities, the sign constraints and the 11/2 bound.

    Args:
        n: Number of points, at least 2.
        alpha_pairs: Use one variable ``a<i>_<j>`` per line instead of ``S_alpha``.

    Raises:
        PreconditionError: If n < 2; the one-point case has no lines.
    """
    config = Theorem3Config(n)
    if n < 2:
        raise PreconditionError("the constraint system needs at least two points")
    system = ConstraintSystem.of(
        [
            c2_constraint(config),
            c1_squared_constraint(config, alpha_pairs),
            *sign_constraints(config, alpha_pairs),
            sum_bound_constraint(config),
        ]
    )
    logger.debug("built {} constraints in {} variables for n = {}", len(system), len(system.variables), n)
    return system


def raw_tuple_constraints(n: int) -> list[Constraint]:
    """3 deg - beta_i1 - ... - beta_i6 >= 0 for every six of the points.

    The twisted cubic through the six points has degree 3 and meets each E_i
    once, so xi pairs with its strict transform to 3 deg - sum of six betas.
    """
    config = Theorem3Config(n)
    return [
        Constraint.ge(
            3 * _DEG,
            LinExpr.total(f"b{i}" for i in six),
            label="six points " + " ".join(str(i) for i in six),
        )
        for six in itertools.combinations(range(1, config.n + 1), 6)
    ]


def case_constraints(n: int, raw: bool = False) -> list[Constraint]:
    """The extra bound of the case that covers n.

    Case 1 (n >= 10) adds nothing. With ``raw`` set, case 2 is given as the
    per-six-points constraints instead of their average.
    """
    config = Theorem3Config(n)
    rule = config.case
    bound = rule.bound(n)
    if bound is None:
        return []
    if raw and rule.divisor == 2:
        return raw_tuple_constraints(n)
    return [Constraint.ge(bound * _DEG, LinExpr.total(config.betas), label=f"case {rule.label} bound")]
