"""Tests for the Property A report and the zeta = pi*xi - alpha E split."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from threefold_chow import (
    CurveCenterSpec,
    CurveClass,
    DivisorClass,
    ModelMismatchError,
    blow_up_curve,
    blow_up_point,
    intersect,
    mul_divisors,
    p3_model,
    pullback,
)
from threefold_property import PreconditionError, decompose, property_a_report


# =============================================================================
# Fixtures
# =============================================================================


@pytest.fixture
def p3():
    return p3_model()


@pytest.fixture
def line_blowup(p3):
    return blow_up_curve(p3, CurveCenterSpec(curve=p3.curve("L"), genus=0))


@st.composite
def parents(draw):
    """P^3 after up to three random blowups."""
    model = p3_model()
    for _ in range(draw(st.integers(0, 3))):
        if draw(st.booleans()):
            model = blow_up_point(model)
        else:
            size = len(model.curve_basis)
            coeffs = draw(st.lists(st.integers(-2, 2), min_size=size, max_size=size).filter(any))
            model = blow_up_curve(
                model, CurveCenterSpec(curve=CurveClass(model.curve_basis, tuple(coeffs)), genus=draw(st.integers(0, 2)))
            )
    return model


@st.composite
def curve_blowups_with_class(draw):
    """(X, xi, alpha) with X a curve blowup of a random parent and xi a parent divisor."""
    parent = draw(parents())
    size = len(parent.curve_basis)
    coeffs = draw(st.lists(st.integers(-2, 2), min_size=size, max_size=size).filter(any))
    center = CurveCenterSpec(curve=CurveClass(parent.curve_basis, tuple(coeffs)), genus=draw(st.integers(0, 3)))
    model = blow_up_curve(parent, center)
    rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    xi = DivisorClass(
        parent.divisor_basis, tuple(draw(st.lists(rationals, min_size=len(parent.divisor_basis), max_size=len(parent.divisor_basis))))
    )
    return model, xi, draw(rationals)


# =============================================================================
# Tests
# =============================================================================


class TestPropertyAReport:
    """Tests for property_a_report on fixed classes."""

    def test_hyperplane_of_p3(self, p3):
        """H on P^3 has H^2 = L, so the hypotheses fail."""
        report = property_a_report(p3, p3.divisor("H"))
        assert report.zeta_sq == {"L": 1}
        assert report.zeta_c1_sq == 16
        assert report.zeta_c2 == 6
        assert not report.hypotheses_met
        assert report.zeta_sq_text == "1*L"

    def test_zero_class(self, p3):
        """The zero class meets every hypothesis trivially."""
        report = property_a_report(p3, DivisorClass.zero(p3.divisor_basis))
        assert report.zeta_sq == {}
        assert report.zeta_sq_text == "0"
        assert report.hypotheses_met

    def test_line_blowup_square_zero_class(self, line_blowup):
        """2H - 2E1 on the blowup of a line: zeta^2 = 0, but zeta.c2 = 6 > 0."""
        zeta = line_blowup.divisor_class({"H": 2, "E1": -2})
        report = property_a_report(line_blowup, zeta)
        assert report.zeta_sq == {}
        assert report.zeta_c1_sq == 18
        assert report.zeta_c2 == 6
        assert not report.hypotheses_met

    def test_pencil_through_the_line(self, line_blowup):
        """H - E1 is the pencil of planes through the line."""
        report = property_a_report(line_blowup, line_blowup.divisor_class({"H": 1, "E1": -1}))
        assert report.zeta_sq == {}
        assert report.zeta_c1_sq == 9
        assert report.zeta_c2 == 3

    def test_json_dump_is_exact(self, line_blowup):
        """Rationals are dumped as numerator/denominator pairs."""
        zeta = line_blowup.divisor_class({"H": "1/2"})
        dumped = property_a_report(line_blowup, zeta).model_dump(mode="json")
        assert dumped["zeta_c2"] == {"numerator": 7, "denominator": 2}
        assert dumped["hypotheses_met"] is False

    def test_foreign_class(self, p3, line_blowup):
        """A class from another model is rejected."""
        with pytest.raises(ModelMismatchError):
            property_a_report(line_blowup, p3.divisor("H"))


class TestDecompose:
    """Tests for decompose."""

    def test_line_blowup(self, line_blowup):
        """2H - 2E1 splits as xi = 2H, alpha = 2."""
        xi, alpha = decompose(line_blowup, line_blowup.divisor_class({"H": 2, "E1": -2}))
        assert xi == 2 * line_blowup.parent.divisor("H")
        assert alpha == 2

    def test_base_model(self, p3):
        """P^3 itself has no last blowup."""
        with pytest.raises(PreconditionError):
            decompose(p3, p3.divisor("H"))


class TestSingleBlowupIdentities:
    """Randomized identities for zeta = pi*xi - alpha F across a curve blowup."""

    @settings(max_examples=100, deadline=None)
    @given(curve_blowups_with_class())
    def test_pullback_identities(self, data):
        """alpha = 0: zeta.c1^2 = xi.c1^2 - xi.C and zeta.c2 = xi.c2 + xi.C."""
        model, xi, _ = data
        parent = model.parent
        curve = model.last_record.center.curve
        report = property_a_report(model, pullback(model, xi))
        xi_c1_sq = intersect(parent, (xi, mul_divisors(parent, parent.c1, parent.c1)))
        xi_c2 = intersect(parent, (xi, parent.c2))
        assert report.zeta_c1_sq == xi_c1_sq - parent.pair(xi, curve)
        assert report.zeta_c2 == xi_c2 + parent.pair(xi, curve)

    @settings(max_examples=100, deadline=None)
    @given(curve_blowups_with_class())
    def test_c2_identity_with_exceptional_part(self, data):
        """zeta.c2 = xi.c2 + xi.C - alpha c1.C."""
        model, xi, alpha = data
        parent = model.parent
        curve = model.last_record.center.curve
        zeta = pullback(model, xi) - alpha * model.divisor(model.last_record.exceptional_name)
        expected = intersect(parent, (xi, parent.c2)) + parent.pair(xi, curve) - alpha * parent.pair(parent.c1, curve)
        assert property_a_report(model, zeta).zeta_c2 == expected

    @settings(max_examples=100, deadline=None)
    @given(curve_blowups_with_class())
    def test_square_fiber_coefficient(self, data):
        """The f-coefficient of zeta^2 is alpha^2 gamma - 2 alpha xi.C."""
        model, xi, alpha = data
        record = model.last_record
        zeta = pullback(model, xi) - alpha * model.divisor(record.exceptional_name)
        square = mul_divisors(model, zeta, zeta)
        xi_c = model.parent.pair(xi, record.center.curve)
        assert square[record.curve_name] == alpha**2 * record.gamma - 2 * alpha * xi_c
        assert decompose(model, zeta) == (xi, Fraction(alpha))
