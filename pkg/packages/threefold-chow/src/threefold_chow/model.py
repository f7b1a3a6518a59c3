"""The even-cohomology skeleton of a smooth projective threefold."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction

from .classes import CurveClass, DivisorClass
from .exceptions import CenterSpecError, ModelMismatchError, ParityError
from .rational import as_fraction


class BlowupKind(StrEnum):
    POINT = "point"
    CURVE = "curve"


@dataclass(frozen=True)
class CurveCenterSpec:
    """A smooth curve to be blown up.

    ``decomposable`` is ``None`` when the splitting of the normal bundle is
    unknown. Smooth rational curves always have a decomposable normal bundle
    (Grothendieck), so genus 0 resolves ``None`` to ``True``.

    ``tau`` is the degree of the normalized bundle, i.e. the self-intersection
    of the zero section of the exceptional ruled surface.
    """

    curve: CurveClass
    genus: int
    decomposable: bool | None = None
    tau: int | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.curve, CurveClass):
            raise CenterSpecError("the center of a curve blowup must be a CurveClass")
        if isinstance(self.genus, bool) or not isinstance(self.genus, int) or self.genus < 0:
            raise CenterSpecError(f"genus must be a non-negative integer, got {self.genus!r}")
        if self.tau is not None and (isinstance(self.tau, bool) or not isinstance(self.tau, int)):
            raise CenterSpecError(f"tau must be an integer, got {self.tau!r}")
        if self.genus == 0 and self.decomposable is False:
            raise CenterSpecError("a smooth rational curve always has a decomposable normal bundle")

    @property
    def is_decomposable(self) -> bool | None:
        if self.decomposable is not None:
            return self.decomposable
        return True if self.genus == 0 else None

    def check_tau(self, gamma: int) -> None:
        """Validate ``tau`` against gamma: tau <= 0 and tau = gamma (mod 2)."""
        if self.tau is None:
            return
        if self.tau > 0:
            raise CenterSpecError(f"tau must be <= 0, got {self.tau}")
        if (self.tau - gamma) % 2:
            raise ParityError(f"tau={self.tau} and gamma={gamma} have different parity")


@dataclass(frozen=True)
class BlowupRecord:
    """Provenance of one blowup step."""

    kind: BlowupKind
    index: int
    exceptional_index: int
    new_curve_index: int
    exceptional_name: str
    curve_name: str
    center: CurveCenterSpec | None = None
    gamma: int | None = None
    mult_with_prior: tuple[int, ...] = ()


@dataclass(frozen=True, eq=False)
class ThreefoldModel:
    """Divisor/curve bases, the H^2 x H^4 pairing, the cup-product table and Chern classes.

    ``mult[i][j]`` is the curve class of ``divisor_basis[i] * divisor_basis[j]``.
    Models are immutable; blowup constructors return new models pointing back
    at their ``parent``.
    """

    divisor_basis: tuple[str, ...]
    curve_basis: tuple[str, ...]
    pairing: tuple[tuple[Fraction, ...], ...]
    mult: tuple[tuple[CurveClass, ...], ...]
    c1: DivisorClass
    c2: CurveClass
    provenance: tuple[BlowupRecord, ...] = ()
    parent: ThreefoldModel | None = field(default=None, repr=False)

    def __post_init__(self) -> None:
        nd, nc = len(self.divisor_basis), len(self.curve_basis)
        if len(set(self.divisor_basis) | set(self.curve_basis)) != nd + nc:
            raise ModelMismatchError("basis names must be unique")
        if len(self.pairing) != nd or any(len(row) != nc for row in self.pairing):
            raise ModelMismatchError(f"pairing must be {nd} x {nc}")
        object.__setattr__(
            self, "pairing", tuple(tuple(as_fraction(v) for v in row) for row in self.pairing)
        )
        if len(self.mult) != nd or any(len(row) != nd for row in self.mult):
            raise ModelMismatchError(f"product table must be {nd} x {nd}")
        for i, j in itertools.product(range(nd), repeat=2):
            if self.mult[i][j].basis != self.curve_basis:
                raise ModelMismatchError("product table entries must be curve classes of this model")
            if self.mult[i][j] != self.mult[j][i]:
                raise ModelMismatchError(
                    f"product table is not symmetric at ({self.divisor_basis[i]}, {self.divisor_basis[j]})"
                )
        if self.c1.basis != self.divisor_basis or self.c2.basis != self.curve_basis:
            raise ModelMismatchError("Chern classes must live on this model")

    @property
    def depth(self) -> int:
        return len(self.provenance)

    @property
    def last_record(self) -> BlowupRecord | None:
        return self.provenance[-1] if self.provenance else None

    def divisor(self, name: str) -> DivisorClass:
        return DivisorClass.generator(self.divisor_basis, name)

    def curve(self, name: str) -> CurveClass:
        return CurveClass.generator(self.curve_basis, name)

    def divisor_class(self, values: dict[str, Fraction | int | str]) -> DivisorClass:
        return DivisorClass.from_mapping(self.divisor_basis, values)

    def curve_class(self, values: dict[str, Fraction | int | str]) -> CurveClass:
        return CurveClass.from_mapping(self.curve_basis, values)

    def owns(self, x: DivisorClass | CurveClass) -> bool:
        if isinstance(x, DivisorClass):
            return x.basis == self.divisor_basis
        if isinstance(x, CurveClass):
            return x.basis == self.curve_basis
        return False

    def require(self, x: DivisorClass | CurveClass) -> None:
        if not self.owns(x):
            raise ModelMismatchError(
                f"{type(x).__name__} over ({', '.join(x.basis)}) does not belong to this model"
            )

    def pair(self, d: DivisorClass, z: CurveClass) -> Fraction:
        """The H^2 x H^4 -> Q pairing."""
        self.require(d)
        self.require(z)
        total = Fraction(0)
        for a, row in zip(d.coeffs, self.pairing):
            if a:
                total += a * sum((r * b for r, b in zip(row, z.coeffs)), Fraction(0))
        return total

    def mul(self, a: DivisorClass, b: DivisorClass) -> CurveClass:
        """Bilinear extension of the product table."""
        self.require(a)
        self.require(b)
        acc = [Fraction(0)] * len(self.curve_basis)
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if not y:
                    continue
                w = x * y
                for k, c in enumerate(self.mult[i][j].coeffs):
                    if c:
                        acc[k] += w * c
        return CurveClass(self.curve_basis, tuple(acc))

    def triple(self, a: str, b: str, c: str) -> Fraction:
        """triple(a, b, c) = pairing(c, a*b) on basis names."""
        return self.pair(self.divisor(c), self.mul(self.divisor(a), self.divisor(b)))

    def asymmetric_triples(self) -> list[tuple[str, str, str]]:
        """Basis triples whose value changes under some permutation (empty on a valid model)."""
        bad = []
        for a, b, c in itertools.combinations_with_replacement(self.divisor_basis, 3):
            values = {self.triple(*p) for p in itertools.permutations((a, b, c))}
            if len(values) > 1:
                bad.append((a, b, c))
        return bad

    def ancestors(self) -> list[ThreefoldModel]:
        """This model followed by its parent, grandparent, ... down to the base."""
        chain: list[ThreefoldModel] = []
        node: ThreefoldModel | None = self
        while node is not None:
            chain.append(node)
            node = node.parent
        return chain

    @property
    def base(self) -> ThreefoldModel:
        return self.ancestors()[-1]
