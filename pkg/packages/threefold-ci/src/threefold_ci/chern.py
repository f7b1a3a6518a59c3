"""Closed forms for c1, c2 and the bracket splitting of the c2 coefficient."""

import itertools
from fractions import Fraction

from threefold_chow import p3_model

from .reports import BracketSplit, GLandmarks
from .spec import CISpec


def chern_classes_ci(spec: CISpec) -> tuple[int, int]:
    """Coefficients of h and h^2 in c1(X) and c2(X).

    c1 = (n + 1) - sum d and c2 = n(n+1)/2 - sum_{i<j} d_i d_j - (n+1) sum d + (sum d)^2.
    """
    n, total = spec.n, spec.degree_sum
    pairs = sum(a * b for a, b in itertools.combinations(spec.degrees, 2))
    c1 = (n + 1) - total
    c2 = n * (n + 1) // 2 - pairs - (n + 1) * total + total**2
    return c1, c2


def g_value(n: int, x: int | Fraction) -> Fraction:
    """g(x) = n(n+1)/2 - (n+1) x + (n-2)/(2(n-3)) x^2.

    Raises:
        ValueError: If n < 4.
    """
    if n < 4:
        raise ValueError(f"g needs n >= 4, got {n}")
    x = Fraction(x)
    return Fraction(n * (n + 1), 2) - (n + 1) * x + Fraction(n - 2, 2 * (n - 3)) * x**2


def first_bracket(spec: CISpec) -> Fraction:
    """(n-4)/(2(n-3)) (sum d)^2 - sum_{i<j} d_i d_j, non-negative by Cauchy-Schwarz."""
    pairs = sum(a * b for a, b in itertools.combinations(spec.degrees, 2))
    return Fraction(spec.n - 4, 2 * (spec.n - 3)) * spec.degree_sum**2 - pairs


def bracket_split(spec: CISpec) -> BracketSplit:
    _, c2 = chern_classes_ci(spec)
    first = first_bracket(spec)
    second = g_value(spec.n, spec.degree_sum)
    return BracketSplit(
        spec=str(spec),
        c2_coeff=c2,
        first=first,
        second=second,
        identity_holds=first + second == c2,
    )


def g_critical_point(n: int) -> Fraction:
    """x0 = (n+1)(n-3)/(n-2), where g attains its minimum."""
    if n < 4:
        raise ValueError(f"g needs n >= 4, got {n}")
    return Fraction((n + 1) * (n - 3), n - 2)


def g_landmarks(n: int) -> GLandmarks:
    """g at x = n-3 .. n and the position of the critical point."""
    values = {x: g_value(n, x) for x in range(n - 3, n + 1)}
    x0 = g_critical_point(n)
    return GLandmarks(
        n=n,
        at_n_minus_3=values[n - 3],
        at_n_minus_2=values[n - 2],
        at_n_minus_1=values[n - 1],
        at_n=values[n],
        critical_point=x0,
        critical_below_n=x0 < n,
        # convex: increasing from the critical point on
        increasing_beyond_n=g_value(n, n + 1) > values[n] and x0 < n,
        positive=all(v > 0 for v in values.values()),
    )


def matches_p3_model() -> bool:
    """The hyperplane in P^4 is P^3: compare with the base model's Chern classes."""
    c1, c2 = chern_classes_ci(CISpec(n=4, degrees=(1,)))
    p3 = p3_model()
    return p3.c1 == c1 * p3.divisor("H") and p3.c2 == c2 * p3.curve("L")
