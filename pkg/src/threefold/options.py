"""Global CLI options shared by every command."""

from dataclasses import dataclass

import typer
from threefold_scenario import ReportFormat


@dataclass(frozen=True)
class CliState:
    format: ReportFormat = ReportFormat.TEXT
    verbose: bool = False

    @property
    def structured(self) -> bool:
        return self.format == ReportFormat.STRUCTURED


def state_of(ctx: typer.Context) -> CliState:
    """The options set by the app callback, or the defaults."""
    return ctx.obj if isinstance(ctx.obj, CliState) else CliState()
