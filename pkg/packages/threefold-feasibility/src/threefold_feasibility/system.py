"""Linear expressions, constraints and constraint systems over the rationals."""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction


class ConstraintError(ValueError):
    """Raised for malformed constraints or systems."""

    def __init__(self, message: str, token: str | None = None):
        super().__init__(message)
        self.token = token


def _exact(value: Fraction | int) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise ConstraintError(f"coefficients must be exact rationals, got {value!r}")
    return Fraction(value)


@dataclass(frozen=True)
class LinExpr:
    """sum(coeff * var) + constant. Terms are sorted by name and never zero."""

    terms: tuple[tuple[str, Fraction], ...] = ()
    constant: Fraction = Fraction(0)

    @classmethod
    def of(cls, coeffs: Mapping[str, Fraction | int] | None = None, constant: Fraction | int = 0) -> LinExpr:
        cleaned = {}
        for name, value in (coeffs or {}).items():
            value = _exact(value)
            if value:
                cleaned[name] = value
        return cls(tuple(sorted(cleaned.items())), _exact(constant))

    @classmethod
    def var(cls, name: str, coeff: Fraction | int = 1) -> LinExpr:
        return cls.of({name: coeff})

    @classmethod
    def total(cls, names: Iterable[str], coeff: Fraction | int = 1) -> LinExpr:
        """coeff * (x1 + x2 + ...)."""
        return cls.of({name: coeff for name in names})

    @property
    def coeffs(self) -> dict[str, Fraction]:
        return dict(self.terms)

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.terms)

    def coefficient(self, name: str) -> Fraction:
        return self.coeffs.get(name, Fraction(0))

    def is_constant(self) -> bool:
        return not self.terms

    def _combine(self, other: LinExpr, sign: int) -> LinExpr:
        coeffs = self.coeffs
        for name, value in other.terms:
            coeffs[name] = coeffs.get(name, Fraction(0)) + sign * value
        return LinExpr.of(coeffs, self.constant + sign * other.constant)

    def __add__(self, other: LinExpr) -> LinExpr:
        return self._combine(other, 1)

    def __sub__(self, other: LinExpr) -> LinExpr:
        return self._combine(other, -1)

    def __neg__(self) -> LinExpr:
        return self * -1

    def __mul__(self, scalar: Fraction | int) -> LinExpr:
        s = _exact(scalar)
        return LinExpr.of({n: s * v for n, v in self.terms}, s * self.constant)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Fraction | int) -> LinExpr:
        return self * (1 / _exact(scalar))

    def substitute(self, name: str, replacement: LinExpr) -> LinExpr:
        """Replace ``name`` by ``replacement``."""
        coeff = self.coefficient(name)
        if not coeff:
            return self
        rest = LinExpr.of({n: v for n, v in self.terms if n != name}, self.constant)
        return rest + coeff * replacement

    def evaluate(self, assignment: Mapping[str, Fraction | int]) -> Fraction:
        return self.constant + sum((v * Fraction(assignment[n]) for n, v in self.terms), Fraction(0))

    def format(self) -> str:
        """Render as ``3/2*d - b1 - b2 + 1``."""
        parts: list[str] = []
        items: list[tuple[str | None, Fraction]] = list(self.terms)
        if self.constant or not items:
            items.append((None, self.constant))
        for name, value in items:
            mag = abs(value)
            if name is None:
                term = str(mag)
            else:
                term = name if mag == 1 else f"{mag}*{name}"
            if not parts:
                parts.append(f"-{term}" if value < 0 else term)
            else:
                parts.append(f"{'-' if value < 0 else '+'} {term}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.format()


class Relation(StrEnum):
    """Relation of an expression to zero."""

    EQ = "="
    GE = ">="
    GT = ">"


@dataclass(frozen=True)
class Constraint:
    """``expr <relation> 0``; the label is carried along but ignored by equality."""

    expr: LinExpr
    relation: Relation
    label: str = field(default="", compare=False)

    @classmethod
    def eq(cls, lhs: LinExpr, rhs: LinExpr | None = None, label: str = "") -> Constraint:
        return cls(lhs - (rhs or LinExpr()), Relation.EQ, label)

    @classmethod
    def ge(cls, lhs: LinExpr, rhs: LinExpr | None = None, label: str = "") -> Constraint:
        return cls(lhs - (rhs or LinExpr()), Relation.GE, label)

    @classmethod
    def gt(cls, lhs: LinExpr, rhs: LinExpr | None = None, label: str = "") -> Constraint:
        return cls(lhs - (rhs or LinExpr()), Relation.GT, label)

    @property
    def is_ground(self) -> bool:
        return self.expr.is_constant()

    @property
    def is_strict(self) -> bool:
        return self.relation is Relation.GT

    def holds(self) -> bool:
        """Truth value of a ground constraint."""
        if not self.is_ground:
            raise ConstraintError(f"constraint {self.format()} still has variables")
        c = self.expr.constant
        match self.relation:
            case Relation.EQ:
                return c == 0
            case Relation.GE:
                return c >= 0
            case Relation.GT:
                return c > 0

    def satisfied_by(self, assignment: Mapping[str, Fraction | int]) -> bool:
        value = self.expr.evaluate(assignment)
        return Constraint(LinExpr.of(constant=value), self.relation).holds()

    def scaled(self, factor: Fraction | int) -> Constraint:
        """Multiply by ``factor`` (> 0 for inequalities, != 0 for equalities)."""
        factor = _exact(factor)
        if factor == 0 or (factor < 0 and self.relation is not Relation.EQ):
            raise ConstraintError(f"cannot scale {self.format()} by {factor}")
        return Constraint(self.expr * factor, self.relation, self.label)

    def normalized(self) -> Constraint:
        """Scale the first coefficient to +-1 (to +1 for equalities)."""
        if self.is_ground:
            return self
        lead = self.expr.terms[0][1]
        factor = 1 / lead if self.relation is Relation.EQ else 1 / abs(lead)
        return self.scaled(factor)

    def substitute(self, name: str, replacement: LinExpr) -> Constraint:
        return Constraint(self.expr.substitute(name, replacement), self.relation, self.label)

    def format(self) -> str:
        text = f"{self.expr.format()} {self.relation} 0"
        return f"{text}  # {self.label}" if self.label else text

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class ConstraintSystem:
    """An ordered, immutable list of constraints."""

    constraints: tuple[Constraint, ...] = ()

    @classmethod
    def of(cls, constraints: Iterable[Constraint]) -> ConstraintSystem:
        return cls(tuple(constraints))

    def __iter__(self) -> Iterator[Constraint]:
        return iter(self.constraints)

    def __len__(self) -> int:
        return len(self.constraints)

    @property
    def variables(self) -> tuple[str, ...]:
        """Variable names in order of first occurrence."""
        seen: dict[str, None] = {}
        for constraint in self.constraints:
            for name in constraint.expr.variables:
                seen.setdefault(name)
        return tuple(seen)

    @property
    def is_homogeneous(self) -> bool:
        return all(c.expr.constant == 0 for c in self.constraints)

    def extended(self, *constraints: Constraint) -> ConstraintSystem:
        return ConstraintSystem(self.constraints + constraints)

    def satisfied_by(self, assignment: Mapping[str, Fraction | int]) -> bool:
        return all(c.satisfied_by(assignment) for c in self.constraints)

    def to_text(self) -> str:
        """One constraint per line, e.g. ``3/2*d - b1 - b2 >= 0``."""
        return "\n".join(c.format() for c in self.constraints)
