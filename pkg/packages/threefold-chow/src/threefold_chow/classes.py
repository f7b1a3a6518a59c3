"""Divisor and curve classes: exact coordinate vectors over a named basis."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, Iterable, Mapping, Self

from .exceptions import ModelMismatchError
from .rational import as_fraction, format_rational


@dataclass(frozen=True)
class _ClassVector:
    """Coordinates of a cohomology class over an ordered basis of names."""

    basis: tuple[str, ...]
    coeffs: tuple[Fraction, ...]

    # real cohomological degree (H^2 -> 2, H^4 -> 4)
    degree: ClassVar[int] = 0

    def __post_init__(self) -> None:
        coeffs = tuple(as_fraction(c) for c in self.coeffs)
        if len(coeffs) != len(self.basis):
            raise ModelMismatchError(
                f"{len(coeffs)} coordinates for a basis of size {len(self.basis)}"
            )
        object.__setattr__(self, "basis", tuple(self.basis))
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, basis: Iterable[str]) -> Self:
        basis = tuple(basis)
        return cls(basis, (Fraction(0),) * len(basis))

    @classmethod
    def generator(cls, basis: Iterable[str], name: str) -> Self:
        """The basis vector called ``name``."""
        basis = tuple(basis)
        if name not in basis:
            raise ModelMismatchError(f"unknown basis name {name!r} (basis: {', '.join(basis)})")
        return cls(basis, tuple(Fraction(int(b == name)) for b in basis))

    @classmethod
    def from_mapping(cls, basis: Iterable[str], values: Mapping[str, Fraction | int | str]) -> Self:
        basis = tuple(basis)
        unknown = set(values) - set(basis)
        if unknown:
            raise ModelMismatchError(f"unknown basis names: {', '.join(sorted(unknown))}")
        return cls(basis, tuple(as_fraction(values.get(name, 0)) for name in basis))

    def __getitem__(self, name: str) -> Fraction:
        try:
            return self.coeffs[self.basis.index(name)]
        except ValueError:
            raise ModelMismatchError(f"unknown basis name {name!r}") from None

    def _check_compatible(self, other: _ClassVector) -> None:
        if type(other) is not type(self):
            raise ModelMismatchError(
                f"cannot combine {type(self).__name__} with {type(other).__name__}"
            )
        if other.basis != self.basis:
            raise ModelMismatchError("classes live on different models")

    def __add__(self, other: Self) -> Self:
        self._check_compatible(other)
        return type(self)(self.basis, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Self) -> Self:
        self._check_compatible(other)
        return type(self)(self.basis, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> Self:
        return type(self)(self.basis, tuple(-a for a in self.coeffs))

    def __mul__(self, scalar: Fraction | int) -> Self:
        if isinstance(scalar, _ClassVector):
            return NotImplemented
        s = as_fraction(scalar)
        return type(self)(self.basis, tuple(s * a for a in self.coeffs))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def as_dict(self) -> dict[str, Fraction]:
        """Non-zero coordinates by basis name."""
        return {name: c for name, c in zip(self.basis, self.coeffs) if c}

    def extended(self, name: str) -> Self:
        """Same class with a zero coordinate appended for ``name`` (coordinate pullback)."""
        return type(self)(self.basis + (name,), self.coeffs + (Fraction(0),))

    def truncated(self) -> Self:
        """Drop the last coordinate (coordinate pushforward)."""
        return type(self)(self.basis[:-1], self.coeffs[:-1])

    def format(self) -> str:
        """Render as a linear combination, e.g. ``4*H - 2*E1``."""
        parts: list[str] = []
        for name, c in zip(self.basis, self.coeffs):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            term = name if mag == 1 else f"{format_rational(mag)}*{name}"
            if not parts:
                parts.append(term if sign == "+" else f"-{term}")
            else:
                parts.append(f"{sign} {term}")
        return " ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.format()


@dataclass(frozen=True)
class DivisorClass(_ClassVector):
    """A class in H^2, indexed by the model's divisor basis."""

    degree: ClassVar[int] = 2


@dataclass(frozen=True)
class CurveClass(_ClassVector):
    """A class in H^4, indexed by the model's curve basis."""

    degree: ClassVar[int] = 4
