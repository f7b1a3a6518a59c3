"""The concrete blowup model of the n-point/all-lines configuration."""

from collections.abc import Sequence
from fractions import Fraction
from functools import cache

from threefold_chow import (
    CurveCenterSpec,
    ThreefoldModel,
    as_fraction,
    blow_up_point,
    p3_model,
    transfer,
)
from threefold_property import PreconditionError, build_x2, property_a_report

from .config import Theorem3Config
from .reports import CrossCheckReport


def line_centers(model_x1: ThreefoldModel, config: Theorem3Config) -> list[CurveCenterSpec]:
    """Strict transforms L - l_i - l_j of the lines, in pair order (gamma = -2)."""
    return [
        CurveCenterSpec(curve=model_x1.curve_class({"L": 1, f"l{i}": -1, f"l{j}": -1}), genus=0)
        for i, j in config.pairs
    ]


@cache
def instantiate_model(n: int) -> tuple[ThreefoldModel, ThreefoldModel]:
    """Blow up n points of P^3, then the C(n,2) joining lines.

    Returns:
        ``(x1, x)``: the point blowup and the final model. Exceptional divisors
        of the lines are ``E<n+1> ..`` in pair order.
    """
    config = Theorem3Config(n)
    x1 = p3_model()
    for _ in range(n):
        x1 = blow_up_point(x1)
    return x1, build_x2(x1, line_centers(x1, config))


def model_cross_check(
    n: int,
    deg: Fraction | int | str,
    betas: Sequence[Fraction | int | str],
    alphas: Sequence[Fraction | int | str],
) -> CrossCheckReport:
    """Evaluate zeta.c2(X) and zeta.c1(X)^2 on the instantiated model.

    Args:
        n: Number of points.
        deg: Coefficient of H in xi.
        betas: beta_1 .. beta_n, with xi = deg H - sum beta_l E_l.
        alphas: One coefficient per line, in pair order.
    """
    config = Theorem3Config(n)
    if len(betas) != n or len(alphas) != config.line_count:
        raise PreconditionError(f"need {n} betas and {config.line_count} alphas")
    deg = as_fraction(deg)
    betas = [as_fraction(b) for b in betas]
    alphas = [as_fraction(a) for a in alphas]

    x1, x = instantiate_model(n)
    xi = x1.divisor_class({"H": deg, **{f"E{k}": -b for k, b in enumerate(betas, start=1)}})
    zeta = transfer(x, xi)
    for record, alpha in zip(x.provenance[n:], alphas):
        zeta = zeta - alpha * x.divisor(record.exceptional_name)
    report = property_a_report(x, zeta)

    lines = config.line_count
    sum_beta, sum_alpha = sum(betas, Fraction(0)), sum(alphas, Fraction(0))
    c2_form = (6 + lines) * deg - (n - 1) * sum_beta
    c1_sq_form = (16 - lines) * deg + (n - 5) * sum_beta - 2 * sum_alpha
    on_locus = c2_form == 0
    c1_sq_on_locus = 22 * deg - 4 * sum_beta - 2 * sum_alpha
    matches = report.zeta_c2 == c2_form and report.zeta_c1_sq == c1_sq_form
    if on_locus:
        matches = matches and report.zeta_c1_sq == c1_sq_on_locus
    return CrossCheckReport(
        n=n,
        zeta=report.zeta,
        zeta_c2=report.zeta_c2,
        zeta_c1_sq=report.zeta_c1_sq,
        c2_closed_form=c2_form,
        c1_sq_closed_form=c1_sq_form,
        on_c2_locus=on_locus,
        c1_sq_on_locus=c1_sq_on_locus,
        matches=matches,
    )
