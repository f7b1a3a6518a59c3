"""Tests for the n-point constraint systems."""

from fractions import Fraction

import pytest

from threefold_feasibility import Constraint, LinExpr, Relation, parse_system
from threefold_points import (
    CASE_TABLE,
    CaseLabel,
    Theorem3Config,
    build_constraints,
    case_constraints,
    case_for,
    raw_tuple_constraints,
)
from threefold_property import PreconditionError


def _labelled(system, label):
    return next(c for c in system if c.label == label)


class TestConfig:
    """Tests for Theorem3Config and the case table."""

    def test_variables(self):
        config = Theorem3Config(3)
        assert config.variables == ("deg", "b1", "b2", "b3", "S_alpha")
        assert config.pairs == [(1, 2), (1, 3), (2, 3)]

    def test_one_point_has_no_alpha(self):
        assert Theorem3Config(1).variables == ("deg", "b1")

    @pytest.mark.parametrize("n", [0, -3, True])
    def test_invalid_n(self, n):
        with pytest.raises(PreconditionError):
            Theorem3Config(n)

    @pytest.mark.parametrize(
        "n, label",
        [(1, CaseLabel.DEGENERATE), (2, CaseLabel.CASE_4), (3, CaseLabel.CASE_4), (4, CaseLabel.CASE_3),
         (5, CaseLabel.CASE_3), (6, CaseLabel.CASE_2), (9, CaseLabel.CASE_2), (10, CaseLabel.CASE_1),
         (30, CaseLabel.CASE_1)],
    )
    def test_case_partition(self, n, label):
        assert case_for(n).label is label

    def test_table_is_a_partition(self):
        """Every n from 1 to 40 is covered exactly once."""
        for n in range(1, 41):
            assert sum(rule.covers(n) for rule in CASE_TABLE) == 1


class TestBuildConstraints:
    """Tests for build_constraints."""

    @pytest.mark.parametrize("n, lhs, rhs", [(10, 51, 9), (4, 12, 3), (2, 7, 1)])
    def test_c2_identity(self, n, lhs, rhs):
        """(6 + C(n,2)) deg = (n-1) sum beta."""
        c2 = _labelled(build_constraints(n), "c2 identity")
        assert c2.relation is Relation.EQ
        assert c2.expr.coefficient("deg") == lhs
        assert all(c2.expr.coefficient(f"b{k}") == -rhs for k in range(1, n + 1))

    def test_c1_squared_identity(self):
        c1_sq = _labelled(build_constraints(4), "c1^2 identity")
        assert c1_sq.expr == LinExpr.of({"deg": 22, "b1": -4, "b2": -4, "b3": -4, "b4": -4, "S_alpha": -2})

    def test_sum_bound(self):
        bound = _labelled(build_constraints(3), "sum bound 11/2")
        assert bound == Constraint.ge(LinExpr.of({"deg": Fraction(11, 2), "b1": -1, "b2": -1, "b3": -1}))

    def test_signs(self):
        system = build_constraints(2)
        labels = {c.label for c in system}
        assert {"deg >= 0", "b1 >= 0", "b2 >= 0", "S_alpha >= 0"} <= labels
        assert system.is_homogeneous

    def test_alpha_pairs(self):
        """One alpha per line replaces the aggregate."""
        system = build_constraints(3, alpha_pairs=True)
        assert {"a1_2", "a1_3", "a2_3"} <= set(system.variables)
        assert "S_alpha" not in system.variables

    def test_one_point(self):
        with pytest.raises(PreconditionError):
            build_constraints(1)

    def test_text_round_trip(self):
        """The printed system parses back to the same constraints."""
        system = build_constraints(5)
        assert parse_system(system.to_text()) == system


class TestCaseConstraints:
    """Tests for case_constraints."""

    @pytest.mark.parametrize("n, bound", [(7, Fraction(7, 2)), (5, Fraction(5, 3)), (3, Fraction(3))])
    def test_bounds(self, n, bound):
        (constraint,) = case_constraints(n)
        assert constraint.expr.coefficient("deg") == bound
        assert constraint.expr.coefficient("b1") == -1
        assert constraint.relation is Relation.GE

    def test_case_1_adds_nothing(self):
        assert case_constraints(12) == []

    def test_degenerate_adds_nothing(self):
        assert case_constraints(1) == []

    def test_raw_case_2(self):
        """n = 7 has seven sextuples."""
        raw = case_constraints(7, raw=True)
        assert len(raw) == 7
        assert raw[0].expr == LinExpr.of({"deg": 3, **{f"b{k}": -1 for k in range(1, 7)}})

    def test_raw_flag_outside_case_2(self):
        """Other cases have no raw form."""
        assert case_constraints(4, raw=True) == case_constraints(4)

    def test_raw_tuple_count(self):
        assert len(raw_tuple_constraints(9)) == 84
