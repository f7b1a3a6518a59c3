"""Parsed scenario directives.

Statements are frozen dataclasses; ``line`` is informational and ignored by
equality, so a scenario compares equal to the re-parse of its own text.
"""

from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction

from threefold_chow import format_rational


class ClassKind(StrEnum):
    DIVISOR = "class"
    CURVE = "curve"


@dataclass(frozen=True)
class LinearForm:
    """A rational combination of basis or class names, in written order."""

    terms: tuple[tuple[str, Fraction], ...]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.terms)

    def format(self) -> str:
        parts: list[str] = []
        for name, value in self.terms:
            mag = abs(value)
            term = name if mag == 1 else f"{format_rational(mag)}*{name}"
            if not parts:
                parts.append(f"-{term}" if value < 0 else term)
            else:
                parts.append(f"{'-' if value < 0 else '+'} {term}")
        return " ".join(parts) or "0"

    def compact(self) -> str:
        """Whitespace-free form for positional operands."""
        return self.format().replace(" ", "")


@dataclass(frozen=True)
class BlowupPoint:
    line: int = field(default=0, compare=False)

    def to_text(self) -> str:
        return "blowup point"


@dataclass(frozen=True)
class BlowupCurve:
    curve: LinearForm
    genus: int
    decomposable: bool | None = None
    tau: int | None = None
    mult_with_prior: tuple[int, ...] = ()
    line: int = field(default=0, compare=False)

    def to_text(self) -> str:
        parts = [f"blowup curve class={self.curve.format()} genus={self.genus}"]
        if self.decomposable is not None:
            parts.append("decomposable" if self.decomposable else "indecomposable")
        if self.tau is not None:
            parts.append(f"tau={self.tau}")
        if self.mult_with_prior:
            parts.append("mult-with-prior=" + ",".join(map(str, self.mult_with_prior)))
        return " ".join(parts)


@dataclass(frozen=True)
class Definition:
    kind: ClassKind
    name: str
    expr: LinearForm
    line: int = field(default=0, compare=False)

    def to_text(self) -> str:
        return f"{self.kind} {self.name} = {self.expr.format()}"


class QueryKind(StrEnum):
    INTERSECT = "intersect"
    CHERN = "chern"
    PROPERTY_A = "property_a"
    THEOREM1 = "theorem1"
    SUBCASE22 = "subcase22"
    THEOREM2 = "theorem2"
    STRICT = "strict"
    MODEL = "model"
    GAMMA = "gamma"
    PUSHFORWARD = "pushforward"
    THEOREM1_TRACE = "theorem1-trace"


@dataclass(frozen=True)
class Query:
    """One ``query`` directive.

    ``operands`` holds positional expressions; ``options`` the ``key=value``
    pairs and bare flags (value ``""``) in canonical order.
    """

    kind: QueryKind
    operands: tuple[LinearForm, ...] = ()
    options: tuple[tuple[str, str], ...] = ()
    line: int = field(default=0, compare=False)

    def option(self, key: str) -> str | None:
        for name, value in self.options:
            if name == key:
                return value
        return None

    def has_flag(self, flag: str) -> bool:
        return (flag, "") in self.options

    def to_text(self) -> str:
        parts = ["query", str(self.kind)]
        parts.extend(operand.compact() for operand in self.operands)
        parts.extend(key if value == "" else f"{key}={value}" for key, value in self.options)
        return " ".join(parts)


Statement = BlowupPoint | BlowupCurve | Definition | Query


@dataclass(frozen=True)
class Scenario:
    base: str = "p3"
    statements: tuple[Statement, ...] = ()

    @property
    def queries(self) -> list[Query]:
        return [s for s in self.statements if isinstance(s, Query)]

    def to_text(self) -> str:
        lines = [f"base {self.base}"]
        lines.extend(statement.to_text() for statement in self.statements)
        return "\n".join(lines) + "\n"
