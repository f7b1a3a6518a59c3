"""sympy cross-checks: the total Chern class series and the bracket identity."""

import math
from fractions import Fraction

import sympy as sp

from .chern import g_critical_point
from .reports import ChernNumbers
from .spec import CISpec

h, x = sp.symbols("h x")


def _to_fraction(value: sp.Expr) -> Fraction:
    rational = sp.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def total_chern_ci(spec: CISpec) -> tuple[int, int, int]:
    """Coefficients of h, h^2, h^3 in (1 + h)^(n+1) / prod (1 + d_j h)."""
    series = (1 + h) ** (spec.n + 1)
    for d in spec.degrees:
        series = series / (1 + d * h)
    poly = sp.series(series, h, 0, 4).removeO()
    c1, c2, c3 = (int(poly.coeff(h, k)) for k in (1, 2, 3))
    return c1, c2, c3


def ci_degree(spec: CISpec) -> int:
    return math.prod(spec.degrees)


def chern_numbers_ci(spec: CISpec) -> ChernNumbers:
    """Chern numbers, using h^3 = deg X."""
    c1, c2, c3 = total_chern_ci(spec)
    degree = ci_degree(spec)
    return ChernNumbers(degree=degree, c1_cubed=c1**3 * degree, c1_c2=c1 * c2 * degree, c3=c3 * degree)


def bracket_identity_symbolic(n: int) -> bool:
    """Check c2 = first bracket + g(sum d) as a polynomial identity in d_1 .. d_{n-3}."""
    if n < 4:
        raise ValueError(f"the identity needs n >= 4, got {n}")
    ds = sp.symbols(f"d1:{n - 2}")
    total = sum(ds)
    pairs = sum(a * b for i, a in enumerate(ds) for b in ds[i + 1:])
    c2 = sp.Rational(n * (n + 1), 2) - pairs - (n + 1) * total + total**2
    first = sp.Rational(n - 4, 2 * (n - 3)) * total**2 - pairs
    g = sp.Rational(n * (n + 1), 2) - (n + 1) * total + sp.Rational(n - 2, 2 * (n - 3)) * total**2
    return sp.expand(c2 - first - g) == 0


def g_critical_point_symbolic(n: int) -> Fraction:
    """Solve g'(x) = 0 with sympy; agrees with :func:`g_critical_point`."""
    g = sp.Rational(n * (n + 1), 2) - (n + 1) * x + sp.Rational(n - 2, 2 * (n - 3)) * x**2
    (root,) = sp.solve(sp.diff(g, x), x)
    value = _to_fraction(root)
    if value != g_critical_point(n):
        raise ArithmeticError(f"critical point mismatch for n = {n}: {value}")
    return value
