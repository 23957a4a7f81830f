"""
Tests for the closed-form reference functions
"""

import math

import pytest

from nctorus_curvature.core.spectral import expansional_f
from nctorus_curvature.reference import (
    APPENDIX_B_NAMES,
    eval_reference,
    get_reference,
    get_reference_names,
)
from nctorus_curvature.reference import conformal, nonconformal


class TestReferenceFactory:
    """Lookup and argument validation"""

    def test_names(self):
        """Test that every printed function is registered"""
        names = get_reference_names()
        assert len(APPENDIX_B_NAMES) == 28
        for name in APPENDIX_B_NAMES + ("psi1", "K", "H", "K1", "H4", "W_33", "Ht4"):
            assert name in names

    def test_no_horizontal_pair_entries(self):
        """Test that K and W have no (1,2) or (2,1) entries"""
        names = get_reference_names()
        for name in ("K_12", "K_21", "W_12", "W_21"):
            assert name not in names
        assert "S_12" in names and "S_21" in names

    def test_unknown(self):
        """Test the error for an unregistered name"""
        with pytest.raises(ValueError, match="Unknown reference function 'Q1'. Valid options"):
            get_reference("Q1")

    def test_arity(self):
        """Test rejection of a wrong number of arguments"""
        with pytest.raises(ValueError, match="'K' takes 1 arguments, got 2"):
            eval_reference("K", (0.1, 0.2))

    def test_delta_coordinates_positive(self):
        """Test that functions of Delta reject non-positive arguments"""
        with pytest.raises(ValueError, match="needs positive arguments"):
            get_reference("psi1")(-1.0)


class TestRemovableSingularities:
    """Extrapolation across the loci where the closed forms are 0/0"""

    def test_K_at_origin(self):
        """Test K(0) = -1/6"""
        assert eval_reference("K", (0.0,)) == pytest.approx(-1 / 6, abs=1e-8)
        assert eval_reference("K", (1e-9,)) == pytest.approx(-1 / 6, abs=1e-8)

    def test_K1_at_origin(self):
        """Test K1(0) = -1/24"""
        assert eval_reference("K1", (0.0,)) == pytest.approx(-1 / 24, abs=1e-8)

    def test_H4_at_origin(self):
        """Test H4(0, 0) = -1/8"""
        assert eval_reference("H4", (0.0, 0.0)) == pytest.approx(-1 / 8, abs=1e-6)

    def test_Ht4_at_origin(self):
        """Test that the Ricci function Ht4 tends to -1/4"""
        assert eval_reference("Ht4", (0.0, 0.0)) == pytest.approx(-1 / 4, abs=1e-5)
        assert eval_reference("Ht4", (1e-3, 2e-3)) == pytest.approx(-1 / 4, abs=1e-2)

    def test_extrapolation_matches_raw_formula(self):
        """Test that extrapolation agrees with the formula just off the locus"""
        assert eval_reference("K", (0.005,)) == pytest.approx(conformal.K(0.005), rel=1e-8)

    def test_binary_on_diagonal_locus(self):
        """Test H on the singular line s + t = 0"""
        value = eval_reference("H", (0.7, -0.7))
        nearby = 0.5 * (conformal.H(0.7, -0.68) + conformal.H(0.7, -0.72))
        assert value == pytest.approx(nearby, rel=1e-3)

    def test_regular_points_untouched(self):
        """Test that regular points use the raw formula"""
        assert eval_reference("H1", (0.5, 1.2)) == nonconformal.H1(0.5, 1.2)


class TestIdentities:
    """Relations between the closed forms"""

    @pytest.mark.parametrize("point", [(0.5, 1.2), (-1.1, 0.4), (2.0, -0.3)])
    def test_H1_antisymmetric(self, point):
        """Test H1(s, t) = -H1(t, s)"""
        s, t = point
        assert eval_reference("H1", (s, t)) == pytest.approx(-eval_reference("H1", (t, s)))

    @pytest.mark.parametrize("point", [(0.5, 1.2), (-1.1, 0.4)])
    def test_S1_symmetric(self, point):
        """Test S1(s, t) = S1(t, s)"""
        s, t = point
        assert eval_reference("S1", (s, t)) == pytest.approx(eval_reference("S1", (t, s)))

    @pytest.mark.parametrize("point", [(0.5, 1.2), (-1.1, 0.4), (2.0, -0.3)])
    def test_Ht4_is_H4_minus_H2(self, point):
        """Test the Ricci function Ht4 against H4 - H2"""
        expected = nonconformal.H4(*point) - nonconformal.H2(*point)
        assert eval_reference("Ht4", point) == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize("s", [-2.0, -0.6, 0.8, 2.5])
    def test_psi1_gives_K1(self, s):
        """Test K1(s) = psi1(e^s) f(e^s) / (8 pi^2)"""
        # f(x) = int_0^1 x^(u/2) du
        value = eval_reference("psi1", (math.exp(s),)) * expansional_f(s, 2) / (8 * math.pi**2)
        assert value == pytest.approx(eval_reference("K1", (s,)), rel=1e-9)
