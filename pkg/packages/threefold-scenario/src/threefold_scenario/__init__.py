"""Scenario files: parse a blowup sequence with queries, run it, render the report."""

from .exceptions import ScenarioParseError, ScenarioRuntimeError
from .export import ReportFormat, render, render_structured, render_text
from .parser import parse_scenario
from .reports import QueryRecord, RunReport
from .runner import ScenarioRunner, run_scenario
from .statements import (
    BlowupCurve,
    BlowupPoint,
    ClassKind,
    Definition,
    LinearForm,
    Query,
    QueryKind,
    Scenario,
    Statement,
)

__all__ = [
    # Parsing
    "parse_scenario",
    "Scenario",
    "Statement",
    "BlowupPoint",
    "BlowupCurve",
    "Definition",
    "Query",
    "QueryKind",
    "ClassKind",
    "LinearForm",
    # Running
    "run_scenario",
    "ScenarioRunner",
    "QueryRecord",
    "RunReport",
    # Rendering
    "ReportFormat",
    "render",
    "render_text",
    "render_structured",
    # Exceptions
    "ScenarioParseError",
    "ScenarioRuntimeError",
]
