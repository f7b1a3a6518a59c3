"""threefold CLI - scenario runner and Property A checks"""

import sys
from pathlib import Path

import typer
from loguru import logger
from threefold_scenario import ReportFormat, ScenarioParseError, parse_scenario, render, run_scenario

from threefold.options import CliState, state_of

app = typer.Typer(
    name="threefold",
    help="Exact intersection numbers and Property A checks for blowups of threefolds",
    no_args_is_help=True,
)


def _configure_logging(verbose: bool) -> None:
    """stderr only: stdout carries the report."""
    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if verbose else "WARNING", format="{level}: {message}")


@app.callback()
def main(
    ctx: typer.Context,
    format: ReportFormat = typer.Option(
        ReportFormat.TEXT,
        "--format",
        "-f",
        envvar="THREEFOLD_FORMAT",
        help="Report format: text or structured (JSON)",
    ),
    verbose: bool = typer.Option(
        False,
        "--verbose",
        "-v",
        help="Log engine steps to stderr",
    ),
):
    """Exact intersection numbers and Property A checks for blowups of threefolds."""
    _configure_logging(verbose)
    ctx.obj = CliState(format=format, verbose=verbose)


@app.command()
def run(
    ctx: typer.Context,
    file: Path = typer.Argument(
        ...,
        help="Scenario file",
        exists=True,
        readable=True,
        dir_okay=False,
    ),
):
    """Run a scenario file and print one record per query.

    Exits with status 1 on a parse error, an engine error or a failed expect=.

    Example:

        base p3
        blowup point
        class z = 4*H - 2*E1
        query intersect z z z expect=56
    """
    state = state_of(ctx)
    try:
        scenario = parse_scenario(file.read_text(encoding="utf-8"))
    except ScenarioParseError as e:
        typer.echo(f"Error: {file}: {e}", err=True)
        raise typer.Exit(1)
    except UnicodeDecodeError:
        typer.echo(f"Error: Could not decode {file} as UTF-8 text", err=True)
        raise typer.Exit(1)

    if state.verbose:
        typer.echo(f"Running {file} ({len(scenario.statements)} directives)", err=True)
    report = run_scenario(scenario)
    typer.echo(render(report, state.format), nl=False)

    if report.error is not None:
        typer.echo(f"Error: {report.error}", err=True)
        raise typer.Exit(1)
    if report.failed:
        typer.echo(f"Error: expectation failed on line(s) {', '.join(map(str, report.failed))}", err=True)
        raise typer.Exit(1)


@app.command()
def version():
    """Show version."""
    from threefold import __version__

    typer.echo(f"threefold {__version__}")


# Register the check commands (imported at module level for typer registration)
from threefold.cli_checks import remark2, theorem3  # noqa: E402
from threefold.cli_ci import ci, ci_sweep  # noqa: E402

app.command()(theorem3)
app.command()(remark2)
app.command()(ci)
app.command(name="ci-sweep")(ci_sweep)


if __name__ == "__main__":
    app()
