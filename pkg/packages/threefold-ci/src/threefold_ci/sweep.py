"""Exhaustive c2 positivity sweep over small complete intersections."""

import itertools
from dataclasses import dataclass

from loguru import logger

from .chern import bracket_split, chern_classes_ci, g_landmarks
from .reports import Counterexample, GLandmarks, SweepResult
from .spec import CISpec

G_AT_N_NOTE = (
    "g(n) = 3n/(2(n-3)) exactly (6 at n = 4); the simplified value 1/(n-3) "
    "is not what g evaluates to, but both are positive"
)


@dataclass(frozen=True)
class SweepBounds:
    n_max: int = 8
    d_max: int = 6


def specs_up_to(bounds: SweepBounds):
    """Every spec with 4 <= n <= n_max and 1 <= d_j <= d_max, degrees sorted."""
    for n in range(4, bounds.n_max + 1):
        for degrees in itertools.combinations_with_replacement(range(1, bounds.d_max + 1), n - 3):
            yield CISpec(n=n, degrees=degrees)


def verify_c2_positive(n_max: int = SweepBounds.n_max, d_max: int = SweepBounds.d_max) -> SweepResult:
    """Run the bracket certificate and the direct check on every spec in range.

    c2 is symmetric in the degrees, so each multiset of degrees is checked once.
    The first spec where either check fails, or where they disagree, is
    returned as the counterexample.

    Raises:
        ValueError: If n_max < 4 or d_max < 1.
    """
    if n_max < 4 or d_max < 1:
        raise ValueError(f"need n_max >= 4 and d_max >= 1, got {n_max}, {d_max}")
    result = SweepResult(n_max=n_max, d_max=d_max, notes=[G_AT_N_NOTE])
    for spec in specs_up_to(SweepBounds(n_max, d_max)):
        result.checked += 1
        split = bracket_split(spec)
        direct = chern_classes_ci(spec)[1] > 0
        certificate = split.certificate_holds
        reason = None
        if not split.identity_holds:
            reason = "c2 differs from the sum of the brackets"
        elif not certificate:
            reason = "bracket certificate fails"
        elif not direct:
            reason = "c2 coefficient is not positive"
        if reason is not None:
            logger.warning("counterexample {}: {}", spec, reason)
            result.all_positive = False
            result.counterexample = Counterexample(n=spec.n, degrees=list(spec.degrees), reason=reason, split=split)
            return result
    logger.debug("checked {} complete intersections up to n = {}, d = {}", result.checked, n_max, d_max)
    return result


def verify_g_landmarks(n_max: int = 50) -> list[GLandmarks]:
    """g at n-3 .. n for every 4 <= n <= n_max."""
    return [g_landmarks(n) for n in range(4, n_max + 1)]
