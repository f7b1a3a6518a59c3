"""Tests for the c2 chain through point and curve blowups."""

import pytest

from threefold_chow import CurveCenterSpec, DivisorClass, blow_up_curve, blow_up_point, p3_model
from threefold_property import PreconditionError, build_x2, theorem2_chain


# =============================================================================
# Fixtures
# =============================================================================


def points_blowup(n):
    """P^3 blown up at n points."""
    model = p3_model()
    for _ in range(n):
        model = blow_up_point(model)
    return model


@pytest.fixture
def two_points():
    return points_blowup(2)


@pytest.fixture
def joining_line(two_points):
    """Strict transform of the line through both points: c1.D = 0."""
    return CurveCenterSpec(curve=two_points.curve_class({"L": 1, "l1": -1, "l2": -1}), genus=0)


# =============================================================================
# Tests
# =============================================================================


class TestBuildX2:
    """Tests for build_x2."""

    def test_one_curve(self, two_points, joining_line):
        """One curve blowup is appended."""
        model = build_x2(two_points, [joining_line])
        assert model.depth == 3
        assert model.last_record.gamma == -2

    def test_no_curves(self, two_points):
        """Nothing to blow up returns X1 itself."""
        assert build_x2(two_points, []) is two_points


class TestTheorem2Chain:
    """Tests for theorem2_chain."""

    def test_part2_line_is_inapplicable(self, two_points, joining_line):
        """c1.D = 0 > 2g - 2 = -2 fails the genus condition."""
        trace = theorem2_chain(two_points, [joining_line], two_points.divisor("H"), [1], part=2)
        assert not trace.applicable
        assert "exceeds" in trace.verdict

    def test_part1_alpha_zero(self, two_points, joining_line):
        """alpha = 0, xi = H: every term is non-negative and xi.c2 = 6 > 0 is impossible."""
        trace = theorem2_chain(two_points, [joining_line], two_points.divisor("H"), [0])
        values = {step.label: step.value for step in trace.steps}
        assert values["xi.c2(X1)"] == 6
        assert values["xi.c2(X1) + sum of terms"] == 7
        assert values["zeta.c2(X2)"] == 7
        assert trace.consistent
        assert trace.contradiction

    def test_part1_dichotomy_violated(self, two_points, joining_line):
        """alpha > 0 needs xi.D = alpha (2g - 2), impossible here."""
        trace = theorem2_chain(two_points, [joining_line], two_points.divisor("H"), [1])
        assert not trace.consistent
        assert trace.verdict.startswith("inconsistent")

    def test_negative_term_with_alpha_zero(self, two_points, joining_line):
        """xi = H - E1 - E2 gives xi.D = -1 < 0."""
        xi = two_points.divisor_class({"H": 1, "E1": -1, "E2": -1})
        trace = theorem2_chain(two_points, [joining_line], xi, [0])
        assert not trace.consistent

    def test_trivial_class(self, two_points):
        """xi = 0 without curves forces nothing."""
        trace = theorem2_chain(two_points, [], DivisorClass.zero(two_points.divisor_basis), [])
        assert trace.consistent
        assert not trace.contradiction
        assert "(pi1)_* xi = 0" in trace.verdict

    def test_part2_quartic(self):
        """A genus-3 plane quartic through six points has c1.D = 2g - 2 = 4."""
        x1 = points_blowup(6)
        curve = x1.curve_class({"L": 4, **{f"l{k}": -1 for k in range(1, 7)}})
        center = CurveCenterSpec(curve=curve, genus=3, decomposable=True)
        trace = theorem2_chain(x1, [center], x1.divisor("H"), [1], part=2)
        values = {step.label: step.value for step in trace.steps}
        assert trace.applicable
        assert trace.consistent
        assert values["xi.D_1 - alpha_1 c1(X1).D_1"] == 0
        assert values["zeta.c2(X2)"] == 6
        assert trace.contradiction

    def test_no_positivity_assertion(self, two_points, joining_line):
        """Without the c2 positivity assertion the chain only bounds xi.c2."""
        trace = theorem2_chain(
            two_points, [joining_line], two_points.divisor("H"), [0], c2_positive_on_base=False
        )
        assert not trace.contradiction
        assert trace.verdict == "every term is non-negative, so xi.c2(X1) <= 0 is forced"

    def test_notes_list_hypotheses(self, two_points):
        """The consumed hypotheses are recorded."""
        trace = theorem2_chain(two_points, [], two_points.divisor("H"), [])
        assert any("zeta.c1(X2) = 0" in note for note in trace.notes)


class TestTheorem2Preconditions:
    """Tests for rejected inputs."""

    def test_curve_blowup_as_x1(self):
        """X1 must come from point blowups only."""
        p3 = p3_model()
        x1 = blow_up_curve(p3, CurveCenterSpec(curve=p3.curve("L"), genus=0))
        with pytest.raises(PreconditionError):
            theorem2_chain(x1, [], x1.divisor("H"), [])

    def test_negative_alpha(self, two_points, joining_line):
        with pytest.raises(PreconditionError):
            theorem2_chain(two_points, [joining_line], two_points.divisor("H"), [-1])

    def test_length_mismatch(self, two_points, joining_line):
        with pytest.raises(PreconditionError):
            theorem2_chain(two_points, [joining_line], two_points.divisor("H"), [])

    def test_bad_part(self, two_points):
        with pytest.raises(PreconditionError):
            theorem2_chain(two_points, [], two_points.divisor("H"), [], part=3)
