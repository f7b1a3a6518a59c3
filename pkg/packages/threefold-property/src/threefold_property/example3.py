"""Parity rule for blowing up a smooth rational curve on a curve blowup of P^3."""

from .exceptions import PreconditionError
from .reports import Example3Result


def example3_parity(degree: int, m: int, fiber: bool = False) -> Example3Result:
    """c1(X1).D for a smooth rational curve D on X1 = Bl_{C_j} P^3.

    A fiber of an exceptional divisor has c1(X1).D = 2 - 2g + F.D = 1. Otherwise D
    is the strict transform of a curve of the given degree meeting the centers in
    ``m`` points (with multiplicity), so c1(X1).D = 4 deg - m; the single-blowup
    criterion applies iff this is odd.
    """
    if fiber:
        return Example3Result(c1_degree=1, applicable=True)
    if degree < 1:
        raise PreconditionError(f"degree must be positive, got {degree}")
    if m < 0:
        raise PreconditionError(f"m must be non-negative, got {m}")
    c1_degree = 4 * degree - m
    return Example3Result(c1_degree=c1_degree, applicable=c1_degree % 2 == 1)
