"""threefold CLI - Property A checks for points of P^3"""

import json
from pathlib import Path

import typer
from pydantic import ValidationError
from threefold_chow import format_rational
from threefold_points import decide_deg_zero
from threefold_property import PreconditionError, Remark2Inputs, remark2_check_inputs

from threefold.options import state_of


def theorem3(
    ctx: typer.Context,
    n: int = typer.Option(
        ...,
        "--n",
        "-n",
        min=1,
        help="Number of points in general position",
    ),
    raw_constraints: bool = typer.Option(
        False,
        "--raw-constraints",
        help="Use the per-six-points constraints instead of the averaged bound (6 <= n <= 9)",
    ),
    show_system: bool = typer.Option(
        False,
        "--show-system",
        help="Print the constraint system handed to the elimination",
    ),
):
    """Decide whether deg (pi_* zeta) = 0 is forced for n points and their lines.

    Examples:

        threefold theorem3 --n 10

        threefold --format structured theorem3 --n 7 --raw-constraints
    """
    state = state_of(ctx)
    decision = decide_deg_zero(n, raw=raw_constraints)

    if state.structured:
        typer.echo(decision.model_dump_json(indent=2))
        return

    verdict = "forced" if decision.forced else "not forced"
    typer.echo(f"n = {n}: deg = 0 {verdict} (case {decision.case})")
    for line in decision.trace.render():
        typer.echo(f"  {line}")
    if show_system:
        typer.echo("  system:")
        for line in decision.system:
            typer.echo(f"    {line}")


def remark2(
    ctx: typer.Context,
    config: Path = typer.Option(
        ...,
        "--config",
        "-c",
        help='JSON file: incidence/degrees/genera/c1_degrees[/lambda], or {"lines": n}',
        exists=True,
        readable=True,
        dir_okay=False,
    ),
):
    """Evaluate the generalized line criterion for a configuration of curves.

    Examples:

        echo '{"lines": 10}' > ten.json
        threefold remark2 --config ten.json
    """
    state = state_of(ctx)
    try:
        inputs = Remark2Inputs.model_validate_json(config.read_text(encoding="utf-8"))
        verdict = remark2_check_inputs(inputs)
    except ValidationError as e:
        typer.echo(f"Error: Invalid configuration {config}:\n{e}", err=True)
        raise typer.Exit(1)
    except PreconditionError as e:
        typer.echo(f"Error: {e}", err=True)
        raise typer.Exit(1)

    if state.structured:
        typer.echo(json.dumps(verdict.model_dump(mode="json"), indent=2))
        return

    typer.echo(f"gamma = {verdict.gamma}, lambda = {format_rational(verdict.lam)}")
    for condition in verdict.conditions:
        typer.echo(f"  {condition.render()}")
    typer.echo(f"criterion {'holds' if verdict.holds else 'fails'}")
