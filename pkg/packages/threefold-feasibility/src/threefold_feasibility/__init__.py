"""Exact rational linear feasibility by Fourier-Motzkin elimination."""

from .elimination import eliminate_variable, forces_zero, is_feasible, project
from .system import Constraint, ConstraintError, ConstraintSystem, LinExpr, Relation
from .text import parse_constraint, parse_expr, parse_linear, parse_rational, parse_system

__all__ = [
    # Types
    "LinExpr",
    "Relation",
    "Constraint",
    "ConstraintSystem",
    "ConstraintError",
    # Elimination
    "eliminate_variable",
    "is_feasible",
    "forces_zero",
    "project",
    # Text form
    "parse_rational",
    "parse_linear",
    "parse_expr",
    "parse_constraint",
    "parse_system",
]
