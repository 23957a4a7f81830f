"""
Tests for the reduction of xi-integrals to radial integrals
"""

from fractions import Fraction

import pytest

from nctorus_curvature.core import Coefficient, SymbolExpr
from nctorus_curvature.core.notation import parse_symbol
from nctorus_curvature.core.words import b0u, dk, kpow
from nctorus_curvature.reduce_integrals import (
    RadialIntegral,
    eta_moment,
    radial_table,
    reduce_conformal,
    reduce_nonconformal,
    reduce_symbol,
    sphere_moment,
)
from nctorus_curvature.reference.appendix_a import SAMPLE_FACTOR, SAMPLE_TERM, SAMPLE_U_POWER


class TestMoments:
    """Exact angular and eta integrals"""

    def test_sphere_area(self):
        """Test the area of the unit spheres"""
        assert sphere_moment((0, 0, 0)) == Coefficient(4, pi_half=2)
        assert sphere_moment((0, 0)) == Coefficient(2, pi_half=2)

    def test_second_moment(self):
        """Test a second moment over the sphere"""
        assert sphere_moment((2, 0, 0)) == Coefficient(Fraction(4, 3), pi_half=2)

    def test_odd_moment_vanishes(self):
        """Test that odd moments vanish"""
        assert sphere_moment((1, 2, 0)).is_zero

    def test_eta_moments(self):
        """Test the eta integrals"""
        assert eta_moment(0, Fraction(1)) == Coefficient(1, pi_half=2)
        assert eta_moment(2, Fraction(2)) == Coefficient(Fraction(1, 2), pi_half=2)
        assert eta_moment(3, Fraction(5)).is_zero

    def test_divergent_eta_moment(self):
        """Test rejection of divergent eta integrals"""
        with pytest.raises(ValueError, match="Divergent eta-integral"):
            eta_moment(2, Fraction(3, 2))


class TestRadialIntegral:
    """Structure of a reduced integral"""

    def test_parts(self):
        """Test the parts of a radial integral"""
        word = (kpow(2), b0u(1), dk(1), kpow(1), b0u(2))
        r = RadialIntegral(Coefficient(1), Fraction(1), word)
        assert r.head == 2
        assert r.ms == (1, 2)
        assert r.rhos == ((dk(1), 1),)
        assert r.nu == 2
        assert r.arity == 1

    def test_table(self):
        """Test the printed radial table"""
        r = RadialIntegral(Coefficient(3), Fraction(1), (b0u(2),))
        assert radial_table([r]) == {(Fraction(1), (b0u(2),)): Coefficient(3)}


class TestReduction:
    """Spherical and cylindrical schemes"""

    def test_spherical_needs_equal_powers(self, nonconformal3):
        """Test that spherical reduction needs equal powers"""
        with pytest.raises(ValueError, match="Spherical reduction needs equal leading powers"):
            reduce_conformal(SymbolExpr.b0(3), nonconformal3)

    def test_cylindrical_needs_horizontal_powers(self, conformal3):
        """Test that cylindrical reduction needs (c, c, 0)"""
        with pytest.raises(ValueError, match="Cylindrical reduction needs leading powers"):
            reduce_nonconformal(SymbolExpr.b0(3), conformal3)

    def test_odd_terms_vanish(self, conformal3):
        """Test that odd xi terms integrate to zero"""
        assert reduce_conformal(parse_symbol("x1 b0^2 d1(k) b0"), conformal3) == []

    def test_spherical_term(self, conformal3):
        """Test the reduction of one spherical term"""
        [r] = reduce_symbol(parse_symbol("x1^2 b0^2 d1(k) b0"), conformal3)
        # (4 pi / 3) / 2 times the normalization, u^(3/2)
        assert r.u_power == Fraction(3, 2)
        assert r.coeff == Coefficient(Fraction(2, 3), pi_half=2) * conformal3.normalization
        assert r.word == (b0u(2), dk(1), b0u(1))

    def test_sample_term(self, nonconformal3):
        """Test the reduction of the sample term"""
        integrals = reduce_nonconformal(parse_symbol(SAMPLE_TERM), nonconformal3)
        assert len(integrals) == 4
        for r in integrals:
            assert r.u_power == SAMPLE_U_POWER
            assert r.coeff / nonconformal3.normalization == SAMPLE_FACTOR
