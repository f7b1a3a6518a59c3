"""Tests for eliminate_variable, is_feasible, forces_zero and project."""

from fractions import Fraction

import pytest

from threefold_feasibility import (
    Constraint,
    ConstraintError,
    ConstraintSystem,
    LinExpr,
    Relation,
    eliminate_variable,
    forces_zero,
    is_feasible,
    parse_system,
    project,
)

x, y = LinExpr.var("x"), LinExpr.var("y")


def const(value) -> LinExpr:
    return LinExpr.of(constant=value)


class TestLinExpr:
    """Tests for LinExpr bookkeeping."""

    def test_no_zero_terms(self):
        """Cancelled terms disappear."""
        assert (x + y - x).terms == (("y", Fraction(1)),)

    def test_substitute(self):
        """x -> 2y + 1 in 3x - y gives 5y + 3."""
        expr = (3 * x - y).substitute("x", 2 * y + const(1))
        assert expr == LinExpr.of({"y": 5}, 3)

    def test_format(self):
        """Terms render as p/q*name."""
        expr = LinExpr.of({"d": Fraction(3, 2), "b1": -1, "b2": -1})
        assert expr.format() == "-b1 - b2 + 3/2*d"
        assert LinExpr().format() == "0"

    def test_floats_rejected(self):
        """Only exact coefficients are allowed."""
        with pytest.raises(ConstraintError):
            LinExpr.of({"x": 0.5})


class TestEliminateVariable:
    """Tests for a single elimination step."""

    def test_tautology(self):
        """{x >= 1, -x >= -3} -> {2 >= 0}."""
        system = ConstraintSystem.of([Constraint.ge(x, const(1)), Constraint.ge(-x, const(-3))])
        result = eliminate_variable(system, "x")
        assert "x" not in result.variables
        assert [c.format() for c in result] == ["2 >= 0"]
        assert is_feasible(system)

    def test_contradiction(self):
        """{x >= 1, -x >= 0} -> {-1 >= 0}."""
        system = ConstraintSystem.of([Constraint.ge(x, const(1)), Constraint.ge(-x)])
        result = eliminate_variable(system, "x")
        assert [c.format() for c in result] == ["-1 >= 0"]
        assert not is_feasible(system)

    def test_equality_substituted_first(self):
        """x = 2y is used to replace x everywhere."""
        system = ConstraintSystem.of([Constraint.eq(x, 2 * y), Constraint.ge(x, const(4))])
        result = eliminate_variable(system, "x")
        assert len(result) == 1
        assert result.constraints[0] == Constraint.ge(y, const(2))

    def test_strictness_propagates(self):
        """x > 0 combined with -x >= 0 gives 0 > 0."""
        system = ConstraintSystem.of([Constraint.gt(x), Constraint.ge(-x)])
        result = eliminate_variable(system, "x")
        assert result.constraints[0].relation is Relation.GT
        assert not result.constraints[0].holds()

    def test_absent_variable(self):
        """Eliminating an absent variable returns the system unchanged."""
        system = ConstraintSystem.of([Constraint.ge(x)])
        assert eliminate_variable(system, "y") is system

    def test_aggregated_line_system(self):
        """sum(b) = 17/3 d, 11/2 d >= sum(b), d = 1, b >= 0 is infeasible."""
        betas = [f"b{i}" for i in range(1, 11)]
        total = LinExpr.total(betas)
        d = LinExpr.var("d")
        system = ConstraintSystem.of(
            [
                Constraint.eq(total, Fraction(17, 3) * d),
                Constraint.ge(Fraction(11, 2) * d, total),
                Constraint.eq(d, const(1)),
                *(Constraint.ge(LinExpr.var(b)) for b in betas),
            ]
        )
        reduced = project(system, ["d"])
        assert reduced.variables == ("d",)
        assert Constraint.ge(-d) in reduced.constraints  # 11/2 - 17/3 = -1/6
        ground = project(system, [])
        assert ground.variables == ()
        assert not all(c.holds() for c in ground)
        assert not is_feasible(system)


class TestIsFeasible:
    """Tests for is_feasible."""

    def test_empty(self):
        """The empty system is feasible."""
        assert is_feasible(ConstraintSystem())

    def test_strict_against_equality(self):
        """{x > 0, x = 0} is infeasible."""
        system = ConstraintSystem.of([Constraint.gt(x), Constraint.eq(x)])
        assert not is_feasible(system)

    def test_open_interval(self):
        """0 < x < 1 is feasible, 0 < x < 0 is not."""
        assert is_feasible(parse_system("x > 0\n1 > x"))
        assert not is_feasible(parse_system("x > 0\n0 > x"))

    def test_ground_equality(self):
        """A false ground equality is infeasible."""
        assert not is_feasible(ConstraintSystem.of([Constraint.eq(const(1))]))

    def test_unbounded(self):
        """x + y >= 1 alone is feasible."""
        assert is_feasible(parse_system("x + y >= 1"))

    def test_tighter_row_with_larger_history(self):
        """A pruned looser row must not take the only contradiction with it.

        After substituting x1 and x2, x3 >= 3*x0 >= 9 while x3 <= (4*x0 - 3)/5.
        """
        rows = [
            ({"x0": -1, "x1": 1, "x2": -2, "x3": 2}, 0, Relation.GE),
            ({"x1": 3, "x3": 1}, -3, Relation.GE),
            ({"x0": 2, "x1": 2}, -2, Relation.EQ),
            ({"x0": -2, "x1": 1, "x3": 1}, 3, Relation.GE),
            ({"x0": 1}, -3, Relation.GE),
            ({"x0": 3, "x1": -1, "x2": -3, "x3": -2}, 1, Relation.EQ),
            ({"x0": 2, "x1": 2, "x2": 1, "x3": -1}, -3, Relation.GE),
        ]
        system = ConstraintSystem.of([Constraint(LinExpr.of(c, k), r) for c, k, r in rows])
        assert not is_feasible(system)
        assert not all(c.holds() for c in project(system, []))


class TestForcesZero:
    """Tests for forces_zero."""

    def test_squeezed(self):
        """{x >= 0, -x >= 0} forces x = 0."""
        assert forces_zero(parse_system("x >= 0\n-x >= 0"), "x")

    def test_ray(self):
        """{x >= 0, y >= 0, y = 2x} does not force x = 0."""
        assert not forces_zero(parse_system("x >= 0\ny >= 0\ny = 2*x"), "x")

    def test_without_sign_constraint(self):
        """x = -y with y >= 0 forces x <= 0 only, not x = 0."""
        assert not forces_zero(parse_system("x + y = 0\ny >= 0"), "x")

    def test_non_homogeneous(self):
        """Constant terms are rejected."""
        with pytest.raises(ConstraintError):
            forces_zero(parse_system("x >= 1"), "x")

    def test_rescaling_invariance(self):
        """Positive rescaling of a constraint does not change the verdict."""
        system = parse_system("x >= 0\n2*y - x >= 0\n-y >= 0")
        scaled = ConstraintSystem.of(c.scaled(Fraction(7, 3)) for c in system)
        assert forces_zero(system, "x") is forces_zero(scaled, "x") is True
