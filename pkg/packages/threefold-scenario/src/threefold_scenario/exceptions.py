"""Scenario errors; both carry the line number and the offending token."""


class ScenarioParseError(ValueError):
    """The scenario text does not follow the grammar."""

    def __init__(self, line: int, token: str, message: str):
        self.line = line
        self.token = token
        self.message = message
        super().__init__(f"line {line}: {message} (at {token!r})")


class ScenarioRuntimeError(RuntimeError):
    """A directive failed while the scenario was running."""

    def __init__(self, line: int, message: str, token: str = ""):
        self.line = line
        self.token = token
        self.message = message
        super().__init__(f"line {line}: {message} (at {token!r})")
