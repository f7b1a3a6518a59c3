"""The n-point configuration and the partition of n into proof cases."""

import itertools
from dataclasses import dataclass
from enum import StrEnum
from fractions import Fraction
from math import comb

from threefold_property import PreconditionError

DEG = "deg"
S_ALPHA = "S_alpha"


class CaseLabel(StrEnum):
    CASE_1 = "1"
    CASE_2 = "2"
    CASE_3 = "3"
    CASE_4 = "4"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class CaseRule:
    """Extra bound ``(n / divisor) deg >= sum beta`` used for ``n_min <= n <= n_max``.

    ``divisor`` is ``None`` when no extra bound is needed.
    """

    label: CaseLabel
    n_min: int
    n_max: int | None
    divisor: int | None
    source: str

    def covers(self, n: int) -> bool:
        return n >= self.n_min and (self.n_max is None or n <= self.n_max)

    def bound(self, n: int) -> Fraction | None:
        return None if self.divisor is None else Fraction(n, self.divisor)


CASE_TABLE: tuple[CaseRule, ...] = (
    CaseRule(CaseLabel.CASE_1, 10, None, None, "the bound (11/2) deg >= sum beta already suffices"),
    CaseRule(CaseLabel.CASE_2, 6, 9, 2, "averaged twisted cubics through six of the points"),
    CaseRule(CaseLabel.CASE_3, 4, 5, 3, "rational normal curves through the points"),
    CaseRule(CaseLabel.CASE_4, 2, 3, 1, "a line through each single point"),
    CaseRule(CaseLabel.DEGENERATE, 1, 1, None, "no lines: zeta.c2 = 6 deg"),
)


def case_for(n: int) -> CaseRule:
    for rule in CASE_TABLE:
        if rule.covers(n):
            return rule
    raise PreconditionError(f"n must be at least 1, got {n}")


@dataclass(frozen=True)
class Theorem3Config:
    """n points of P^3, no four of them coplanar, and the lines joining them.

    Variables: ``deg``, ``b1 .. bn`` and the aggregate ``S_alpha`` of the
    exceptional coefficients over the lines.
    """

    n: int

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise PreconditionError(f"n must be a positive integer, got {self.n!r}")

    @property
    def betas(self) -> tuple[str, ...]:
        return tuple(f"b{k}" for k in range(1, self.n + 1))

    @property
    def pairs(self) -> list[tuple[int, int]]:
        """Lines as 1-based point pairs, in lexicographic order."""
        return list(itertools.combinations(range(1, self.n + 1), 2))

    @property
    def line_count(self) -> int:
        return comb(self.n, 2)

    @property
    def variables(self) -> tuple[str, ...]:
        if self.n == 1:
            return (DEG, *self.betas)
        return (DEG, *self.betas, S_ALPHA)

    @property
    def case(self) -> CaseRule:
        return case_for(self.n)
