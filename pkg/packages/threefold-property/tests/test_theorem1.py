"""Tests for the single-blowup checks: applicability, tau ranges and traces."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from threefold_chow import (
    BlowupKind,
    CenterSpecError,
    CurveCenterSpec,
    DivisorClass,
    ParityError,
    blow_up_curve,
    blow_up_point,
    p3_model,
    pullback,
)
from threefold_property import (
    PreconditionError,
    Theorem1Reason,
    subcase22_certificate,
    tau_admissible,
    theorem1_check,
    theorem1_trace,
)


# =============================================================================
# Fixtures
# =============================================================================


@pytest.fixture
def p3():
    return p3_model()


@pytest.fixture
def line_blowup(p3):
    """P^3 blown up along a line (gamma = 2)."""
    return blow_up_curve(p3, CurveCenterSpec(curve=p3.curve("L"), genus=0))


@pytest.fixture
def fiber_blowup(line_blowup):
    """The line blowup blown up again along a fiber f1 (c1.f1 = 1, gamma = -1)."""
    return blow_up_curve(line_blowup, CurveCenterSpec(curve=line_blowup.curve("f1"), genus=0))


# =============================================================================
# Tests
# =============================================================================


class TestTheorem1Check:
    """Tests for theorem1_check."""

    @pytest.mark.parametrize("center", ["point", BlowupKind.POINT])
    def test_point_center(self, p3, center):
        """Point centers always qualify."""
        verdict = theorem1_check(p3, center)
        assert verdict.applicable
        assert verdict.reason is Theorem1Reason.POINT_CENTER

    def test_line_fails_parity(self, p3):
        """c1.L = 4 is even."""
        verdict = theorem1_check(p3, CurveCenterSpec(curve=p3.curve("L"), genus=0))
        assert not verdict.applicable
        assert verdict.reason is Theorem1Reason.FAILS_PARITY
        assert verdict.c1_degree == 4
        assert verdict.gamma == 2

    def test_fiber_is_odd_and_rational(self, line_blowup):
        """A fiber has c1.f = 1; genus 0 makes the normal bundle decomposable."""
        verdict = theorem1_check(line_blowup, CurveCenterSpec(curve=line_blowup.curve("f1"), genus=0))
        assert verdict.applicable
        assert verdict.reason is Theorem1Reason.ODD_AND_DECOMPOSABLE
        assert verdict.c1_degree == 1
        assert verdict.gamma == -1
        assert verdict.rational_curve_rule

    def test_explicit_decomposable_flag(self, line_blowup):
        """An explicit flag does not count as the genus-0 rule."""
        center = CurveCenterSpec(curve=line_blowup.curve("f1"), genus=0, decomposable=True)
        verdict = theorem1_check(line_blowup, center)
        assert verdict.applicable
        assert not verdict.rational_curve_rule

    def test_unknown_decomposability(self, line_blowup):
        """Positive genus without a flag is inconclusive."""
        verdict = theorem1_check(line_blowup, CurveCenterSpec(curve=line_blowup.curve("f1"), genus=1))
        assert not verdict.applicable
        assert verdict.reason is Theorem1Reason.DECOMPOSABILITY_UNKNOWN
        assert verdict.decomposable is None

    def test_not_decomposable(self, line_blowup):
        """An indecomposable normal bundle disqualifies the center."""
        center = CurveCenterSpec(curve=line_blowup.curve("f1"), genus=1, decomposable=False)
        verdict = theorem1_check(line_blowup, center)
        assert verdict.reason is Theorem1Reason.NOT_DECOMPOSABLE

    def test_parity_reported_before_decomposability(self, p3):
        """An even degree wins over an unknown flag."""
        verdict = theorem1_check(p3, CurveCenterSpec(curve=p3.curve("L"), genus=2))
        assert verdict.reason is Theorem1Reason.FAILS_PARITY

    def test_rational_indecomposable_rejected(self, p3):
        """Rational curves always have a decomposable normal bundle."""
        with pytest.raises(CenterSpecError):
            CurveCenterSpec(curve=p3.curve("L"), genus=0, decomposable=False)

    def test_unknown_center(self, p3):
        """Only curve specs and points are centers."""
        with pytest.raises(PreconditionError):
            theorem1_check(p3, "surface")


class TestTauAdmissible:
    """Tests for tau_admissible."""

    def test_even_gamma(self):
        """gamma = 2 allows 0, -2, -4, ..."""
        tau_range = tau_admissible(2)
        assert tau_range.upper == 0
        assert tau_range.first() == [0, -2, -4]
        assert tau_range.describe() == "tau in {0, -2, -4, ...}"

    def test_odd_gamma(self):
        """Odd gamma forces tau <= -1."""
        tau_range = tau_admissible(3)
        assert tau_range.upper == -1
        assert tau_range.contains(-3)
        assert not tau_range.contains(-2)
        assert not tau_range.contains(1)

    def test_zero_and_negative_gamma(self):
        """The bound depends only on the parity of gamma."""
        assert tau_admissible(0).upper == 0
        assert tau_admissible(-1).upper == -1

    def test_not_decomposable(self):
        """Only the parity constraint survives."""
        tau_range = tau_admissible(3, decomposable=False)
        assert tau_range.upper is None
        assert tau_range.contains(5)
        assert tau_range.describe() == "tau = 1 (mod 2)"
        with pytest.raises(ValueError):
            tau_range.first()


class TestSubcase22Certificate:
    """Tests for subcase22_certificate."""

    def test_negative_tau_contradicts(self, line_blowup):
        """tau = -2: zeta.C0 = alpha tau / 2 = -2."""
        xi = 2 * line_blowup.parent.divisor("H")
        trace = subcase22_certificate(line_blowup, xi, 2, -2)
        assert trace.contradiction
        assert trace.steps[-1].label == "zeta.C0"
        assert trace.steps[-1].value == -2

    def test_zero_tau_is_not_excluded(self, line_blowup):
        """tau = 0 gives zeta.C0 = 0."""
        xi = 2 * line_blowup.parent.divisor("H")
        trace = subcase22_certificate(line_blowup, xi, 2, 0)
        assert not trace.contradiction
        assert trace.steps[-1].value == 0

    def test_fiber_blowup(self, fiber_blowup):
        """xi = H + E1, alpha = 2 on the fiber blowup: zeta.C0 = -1."""
        xi = fiber_blowup.parent.divisor_class({"H": 1, "E1": 1})
        trace = subcase22_certificate(fiber_blowup, xi, 2, -1)
        assert trace.contradiction
        assert trace.steps[-1].value == -1

    def test_rational_alpha(self, line_blowup):
        """alpha may be any positive rational."""
        xi = Fraction(1, 2) * line_blowup.parent.divisor("H")
        trace = subcase22_certificate(line_blowup, xi, "1/2", -4)
        assert trace.steps[-1].value == -1

    def test_alpha_not_positive(self, line_blowup):
        """alpha = 0 belongs to the other subcase."""
        with pytest.raises(PreconditionError):
            subcase22_certificate(line_blowup, DivisorClass.zero(("H",)), 0, 0)

    def test_square_not_zero(self, line_blowup):
        """xi.C must equal alpha gamma / 2."""
        with pytest.raises(PreconditionError):
            subcase22_certificate(line_blowup, line_blowup.parent.divisor("H"), 2, -2)

    def test_point_blowup(self, p3):
        """The last blowup must be along a curve."""
        with pytest.raises(PreconditionError):
            subcase22_certificate(blow_up_point(p3), p3.divisor("H"), 1, 0)

    def test_wrong_parity(self, line_blowup):
        """tau and gamma must have the same parity."""
        with pytest.raises(ParityError):
            subcase22_certificate(line_blowup, 2 * line_blowup.parent.divisor("H"), 2, -1)

    @settings(max_examples=60, deadline=None)
    @given(
        st.integers(1, 4),
        st.fractions(min_value=Fraction(1, 4), max_value=4, max_denominator=4),
        st.integers(0, 5),
    )
    def test_certificate_matches_closed_form(self, degree, alpha, k):
        """On the blowup of a multiple of a line, zeta.C0 always equals alpha tau / 2."""
        p3 = p3_model()
        model = blow_up_curve(p3, CurveCenterSpec(curve=degree * p3.curve("L"), genus=0))
        gamma = model.last_record.gamma
        xi = alpha * gamma / (2 * degree) * p3.divisor("H")
        tau = -(gamma % 2) - 2 * k
        trace = subcase22_certificate(model, xi, alpha, tau)
        assert trace.steps[-1].value == alpha * Fraction(tau, 2)
        assert trace.contradiction is (tau < 0)


class TestTheorem1Trace:
    """Tests for theorem1_trace."""

    def test_square_not_zero(self, line_blowup):
        """zeta = H stops at zeta^2 != 0."""
        trace = theorem1_trace(line_blowup, line_blowup.divisor("H"))
        assert not trace.applicable
        assert "zeta^2 != 0" in trace.verdict

    def test_point_blowup_zero_class(self, p3):
        """zeta = 0 on a point blowup descends to the parent."""
        model = blow_up_point(p3)
        trace = theorem1_trace(model, DivisorClass.zero(model.divisor_basis))
        assert trace.applicable
        assert trace.consistent
        assert not trace.contradiction

    def test_negative_alpha(self, line_blowup):
        """-H + E1 has zeta^2 = 0 but alpha = -1 < 0."""
        trace = theorem1_trace(line_blowup, line_blowup.divisor_class({"H": -1, "E1": 1}))
        assert trace.contradiction
        assert "alpha < 0" in trace.verdict

    def test_pullback_of_pencil(self, fiber_blowup):
        """alpha = 0: the identities hold, but zeta.c2 = 4 > 0."""
        xi = fiber_blowup.parent.divisor_class({"H": 1, "E1": -1})
        trace = theorem1_trace(fiber_blowup, pullback(fiber_blowup, xi))
        values = {step.label: step.value for step in trace.steps}
        assert values["xi.C"] == 1
        assert values["xi.c1(Y)^2 - xi.C"] == 8
        assert values["xi.c2(Y) + xi.C"] == 4
        assert trace.consistent
        assert not trace.applicable

    def test_line_example_with_unknown_tau(self, line_blowup):
        """2H - 2E1: even c1.L, so tau = 0 stays possible."""
        trace = theorem1_trace(line_blowup, line_blowup.divisor_class({"H": 2, "E1": -2}))
        assert trace.consistent
        assert not trace.contradiction
        assert "tau = 0 is not excluded" in trace.verdict

    def test_line_example_with_tau(self, line_blowup):
        """An explicit tau = -2 produces the certificate."""
        trace = theorem1_trace(line_blowup, line_blowup.divisor_class({"H": 2, "E1": -2}), tau=-2)
        assert trace.contradiction
        assert trace.steps[-1].value == -2

    def test_fiber_example(self, fiber_blowup):
        """H + E1 - 2E2: odd c1.f1 excludes every admissible tau."""
        zeta = fiber_blowup.divisor_class({"H": 1, "E1": 1, "E2": -2})
        trace = theorem1_trace(fiber_blowup, zeta)
        assert trace.consistent
        assert trace.contradiction
        assert "every admissible tau" in trace.verdict

    def test_tau_from_center(self, p3):
        """A tau recorded on the center is used when none is passed."""
        model = blow_up_curve(p3, CurveCenterSpec(curve=p3.curve("L"), genus=0, tau=0))
        trace = theorem1_trace(model, model.divisor_class({"H": 2, "E1": -2}))
        assert not trace.contradiction
        assert trace.steps[-1].value == 0

    def test_render(self, line_blowup):
        """Rendering starts with the title and ends with the verdict."""
        trace = theorem1_trace(line_blowup, line_blowup.divisor_class({"H": 2, "E1": -2}), tau=-2)
        lines = trace.render()
        assert lines[0] == trace.title
        assert lines[1].startswith("  note: nefness")
        assert lines[-1].startswith("  verdict: contradiction")

    def test_base_model(self, p3):
        """P^3 has no blowup to analyse."""
        with pytest.raises(PreconditionError):
            theorem1_trace(p3, p3.divisor("H"))
