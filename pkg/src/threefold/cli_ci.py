"""threefold CLI - complete-intersection threefolds"""

import json

import typer
from threefold_chow import format_rational
from threefold_ci import (
    CISpec,
    SweepBounds,
    bracket_split,
    chern_classes_ci,
    chern_numbers_ci,
    verify_c2_positive,
)

from threefold.options import state_of


def ci(
    ctx: typer.Context,
    n: int = typer.Option(
        ...,
        "--n",
        "-n",
        help="Dimension of the ambient P^n (at least 4)",
    ),
    degrees: str = typer.Option(
        ...,
        "--degrees",
        "-d",
        help="Comma-separated hypersurface degrees, n - 3 of them (e.g. 2,2)",
    ),
):
    """Chern classes of a complete-intersection threefold and its c2 certificate.

    Examples:

        threefold ci --n 4 --degrees 5

        threefold ci --n 5 --degrees 2,3
    """
    state = state_of(ctx)
    try:
        spec = CISpec.parse(n, degrees)
    except ValueError as e:
        typer.echo(f"Error: Invalid complete intersection - {e}", err=True)
        raise typer.Exit(1)

    c1, c2 = chern_classes_ci(spec)
    split = bracket_split(spec)
    numbers = chern_numbers_ci(spec)

    if state.structured:
        output = {
            "spec": spec.model_dump(mode="json"),
            "c1": c1,
            "c2": c2,
            "bracket_split": split.model_dump(mode="json"),
            "chern_numbers": numbers.model_dump(mode="json"),
        }
        typer.echo(json.dumps(output, indent=2))
        return

    typer.echo(str(spec))
    typer.echo(f"  c1 = {c1}*h")
    typer.echo(f"  c2 = {c2}*h^2")
    typer.echo(f"  first bracket = {format_rational(split.first)}")
    typer.echo(f"  g(sum d) = {format_rational(split.second)}")
    typer.echo(f"  certificate: {'ok' if split.certificate_holds else 'FAILS'}")
    typer.echo(
        f"  degree = {numbers.degree}, c1^3 = {numbers.c1_cubed}, c1.c2 = {numbers.c1_c2}, c3 = {numbers.c3}"
    )


def ci_sweep(
    ctx: typer.Context,
    n_max: int = typer.Option(
        SweepBounds.n_max,
        "--n-max",
        help="Largest ambient dimension",
    ),
    d_max: int = typer.Option(
        SweepBounds.d_max,
        "--d-max",
        help="Largest hypersurface degree",
    ),
):
    """Check c2 > 0 for every complete intersection with n <= n-max, d_j <= d-max.

    Exits with status 1 when a counterexample is found.
    """
    state = state_of(ctx)
    try:
        result = verify_c2_positive(n_max, d_max)
    except ValueError as e:
        typer.echo(f"Error: {e}", err=True)
        raise typer.Exit(1)

    if state.structured:
        typer.echo(result.model_dump_json(indent=2))
    else:
        typer.echo(f"checked {result.checked} complete intersections (n <= {n_max}, d <= {d_max})")
        if result.counterexample is not None:
            ce = result.counterexample
            typer.echo(f"  counterexample: P^{ce.n}, degrees {ce.degrees}: {ce.reason}")
        else:
            typer.echo("  c2 > 0 for all of them")
        for note in result.notes:
            typer.echo(f"  note: {note}")

    if not result.all_positive:
        raise typer.Exit(1)
