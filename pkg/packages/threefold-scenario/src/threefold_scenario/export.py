"""Text and structured renderings of a run report."""

from enum import StrEnum

from .reports import RunReport


class ReportFormat(StrEnum):
    TEXT = "text"
    STRUCTURED = "structured"


def render_text(report: RunReport) -> str:
    """Deterministic human-readable report: one block per query."""
    out: list[str] = []
    for record in report.records:
        out.append(f"line {record.line}: {record.query}")
        out.extend(f"  {line}" for line in record.lines)
        if record.expect is not None:
            out.append(f"  expect {record.expect}: {'ok' if record.passed else 'FAILED'}")
    if report.error is not None:
        out.append(f"error: {report.error}")
    summary = f"{len(report.records)} queries, {len(report.failed)} failed"
    if report.error is not None:
        summary += ", stopped on error"
    out.append(summary)
    return "\n".join(out) + "\n"


def render_structured(report: RunReport) -> str:
    """JSON with rationals as numerator/denominator pairs."""
    return report.model_dump_json(indent=2) + "\n"


def render(report: RunReport, fmt: ReportFormat | str = ReportFormat.TEXT) -> str:
    match ReportFormat(fmt):
        case ReportFormat.STRUCTURED:
            return render_structured(report)
        case _:
            return render_text(report)
