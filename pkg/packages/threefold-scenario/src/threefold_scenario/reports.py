"""Records produced by running a scenario."""

from typing import Any

from pydantic import BaseModel, Field, computed_field

from .statements import QueryKind


class QueryRecord(BaseModel):
    """The outcome of one query: text lines plus JSON-ready data."""

    line: int
    query: str
    kind: QueryKind
    lines: list[str] = Field(default_factory=list)
    data: dict[str, Any] = Field(default_factory=dict)
    expect: str | None = None
    passed: bool | None = None  # None when the query carries no expectation


class RunReport(BaseModel):
    records: list[QueryRecord] = Field(default_factory=list)
    error: str | None = None
    error_line: int | None = None

    @computed_field
    @property
    def failed(self) -> list[int]:
        """Lines of queries whose expectation did not hold."""
        return [r.line for r in self.records if r.passed is False]

    @computed_field
    @property
    def ok(self) -> bool:
        return self.error is None and not self.failed
