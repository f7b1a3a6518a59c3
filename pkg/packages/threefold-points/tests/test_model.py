"""Tests for the instantiated blowup model against the closed forms."""

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from threefold_chow import intersect
from threefold_points import instantiate_model, model_cross_check
from threefold_property import PreconditionError

rationals = st.fractions(min_value=-4, max_value=4, max_denominator=5)


class TestInstantiateModel:
    """Tests for instantiate_model."""

    def test_depth_and_gamma(self):
        x1, x = instantiate_model(3)
        assert x1.depth == 3
        assert x.depth == 6
        assert all(r.gamma == -2 for r in x.provenance[3:])

    def test_c1_c2(self):
        """c1.c2 = 24 survives every blowup."""
        _, x = instantiate_model(4)
        assert intersect(x, (x.c1, x.c2)) == 24


class TestModelCrossCheck:
    """Tests for model_cross_check."""

    @pytest.mark.parametrize("n", [2, 3, 4])
    @settings(max_examples=15, deadline=None)
    @given(data=st.data())
    def test_identities_vanish_on_the_locus(self, n, data):
        """Solving both identities for beta_1 and the last alpha makes both numbers vanish."""
        lines = comb(n, 2)
        deg = data.draw(rationals)
        rest = data.draw(st.lists(rationals, min_size=n - 1, max_size=n - 1))
        beta_1 = Fraction(6 + lines, n - 1) * deg - sum(rest, Fraction(0))
        betas = [beta_1, *rest]
        alphas = data.draw(st.lists(rationals, min_size=lines - 1, max_size=lines - 1))
        alphas.append((22 * deg - 4 * sum(betas, Fraction(0))) / 2 - sum(alphas, Fraction(0)))

        report = model_cross_check(n, deg, betas, alphas)
        assert report.on_c2_locus
        assert report.zeta_c2 == 0
        assert report.zeta_c1_sq == 0
        assert report.matches

    @pytest.mark.parametrize("n", [2, 3])
    @settings(max_examples=15, deadline=None)
    @given(data=st.data())
    def test_closed_forms_off_the_locus(self, n, data):
        lines = comb(n, 2)
        deg = data.draw(rationals)
        betas = data.draw(st.lists(rationals, min_size=n, max_size=n))
        alphas = data.draw(st.lists(rationals, min_size=lines, max_size=lines))
        report = model_cross_check(n, deg, betas, alphas)
        assert report.zeta_c2 == report.c2_closed_form
        assert report.zeta_c1_sq == report.c1_sq_closed_form

    def test_hyperplane_pullback(self):
        """xi = H with no exceptional parts: zeta.c2 = 6 + C(n,2)."""
        report = model_cross_check(3, 1, [0, 0, 0], [0, 0, 0])
        assert report.zeta_c2 == 9
        assert report.zeta_c1_sq == 13
        assert not report.on_c2_locus

    def test_wrong_lengths(self):
        with pytest.raises(PreconditionError):
            model_cross_check(3, 1, [0, 0], [0, 0, 0])
