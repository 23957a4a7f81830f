"""
Tests for F specs, translation factors and spectral functions
"""

import math
from fractions import Fraction

import pytest
from scipy import integrate

from nctorus_curvature.core import Coefficient, QuadratureEvaluator
from nctorus_curvature.core.spectral import (
    CONFORMAL,
    NABLA_COORDINATES,
    FSpec,
    SpectralFunction,
    expansional_f,
    expansional_g,
    quadrature_F,
)


class TestFSpec:
    """Validation, naming and evaluation of F integrals"""

    def test_names(self):
        """Test the printed names of F integrals"""
        assert FSpec((2, 1), Fraction(3)).name == "F^[3]_{2,1}"
        assert FSpec((2, 1), Fraction(3, 2), Fraction(2, 3), CONFORMAL).name == "F_{2,1}"

    def test_arity(self):
        """Test the number of Delta arguments"""
        assert FSpec((1, 0, 1), Fraction(2)).arity == 2

    def test_divergent_at_infinity(self):
        """Test rejection of integrals divergent at infinity"""
        with pytest.raises(ValueError, match="Non-integrable F spec"):
            FSpec((1,), Fraction(1))

    def test_empty(self):
        """Test rejection of a spec without resolvent powers"""
        with pytest.raises(ValueError, match="at least one resolvent power"):
            FSpec((), Fraction(2))

    def test_at_unity_matches_quadrature(self):
        """Test the Beta-function value at Delta = 1"""
        spec = FSpec((2, 1), Fraction(3))
        assert quadrature_F(spec, (1.0,)) == pytest.approx(spec.at_unity(), rel=1e-10)

    def test_simple_value(self):
        """Test a value known in closed form"""
        # int_0^inf (1 + u)^-2 du
        assert quadrature_F(FSpec((1, 1), Fraction(2)), (1.0,)) == pytest.approx(1.0)

    def test_wrong_arity(self):
        """Test rejection of a wrong number of arguments"""
        with pytest.raises(ValueError, match="takes 1 arguments, got 2"):
            quadrature_F(FSpec((1, 1), Fraction(2)), (1.0, 2.0))

    def test_non_positive_argument(self):
        """Test rejection of non-positive arguments"""
        with pytest.raises(ValueError, match="positive arguments"):
            quadrature_F(FSpec((1, 1), Fraction(2)), (-1.0,))


class TestTranslationFactors:
    """f and g against their defining integrals"""

    @pytest.mark.parametrize("x", [-2.5, -0.01, 0.0, 1e-9, 0.7, 3.0])
    @pytest.mark.parametrize("width", [2, 6])
    def test_f(self, x, width):
        """Test the expansional f against its integral"""
        expected = QuadratureEvaluator(1e-13).unit_interval(lambda u: math.exp(u * x / width))
        assert expansional_f(x, width) == pytest.approx(expected, rel=1e-10)

    @pytest.mark.parametrize("x, y", [(0.0, 0.0), (1.0, -1.0), (0.01, 2.0), (-2.0, 1.5)])
    @pytest.mark.parametrize("width", [2, 6])
    def test_g(self, x, y, width):
        """Test the expansional g against its double integral"""
        expected, _ = integrate.dblquad(
            lambda v, u: math.exp((u * x + v * y) / width), 0.0, 1.0, 0.0, lambda u: u
        )
        assert expansional_g(x, y, width) == pytest.approx(expected, rel=1e-8)


class TestSpectralFunction:
    """Sums, scaling and coordinates"""

    def test_leaf_evaluates_to_F(self):
        """Test that a leaf is its coefficient times F"""
        spec = FSpec((2, 1), Fraction(3))
        fn = SpectralFunction.leaf(spec, Coefficient(2))
        assert fn.evaluate((1.5,)) == pytest.approx(2 * quadrature_F(spec, (1.5,)))

    def test_nabla_coordinates(self):
        """Test evaluation in nabla coordinates"""
        spec = FSpec((2, 1), Fraction(3))
        fn = SpectralFunction.leaf(spec).with_coordinates(NABLA_COORDINATES)
        assert fn.evaluate((math.log(1.5),)) == pytest.approx(quadrature_F(spec, (1.5,)))

    def test_cancellation(self):
        """Test that f - f is zero"""
        fn = SpectralFunction.leaf(FSpec((1, 1), Fraction(2)))
        assert (fn - fn).is_zero

    def test_arity_mismatch(self):
        """Test rejection of sums of different arity"""
        unary = SpectralFunction.leaf(FSpec((1, 1), Fraction(2)))
        binary = SpectralFunction.leaf(FSpec((1, 1, 1), Fraction(2)))
        with pytest.raises(ValueError, match="Cannot combine spectral functions"):
            unary + binary

    def test_delta_coordinates_must_be_positive(self):
        """Test rejection of Delta = 0"""
        fn = SpectralFunction.leaf(FSpec((1, 1), Fraction(2)))
        with pytest.raises(ValueError, match="must be positive"):
            fn.evaluate((0.0,))

    def test_custom_evaluator(self):
        """Test evaluation with a supplied F evaluator"""
        fn = SpectralFunction.leaf(FSpec((1, 1), Fraction(2)), Coefficient(1, pi_half=2))
        assert fn.evaluate((3.0,), lambda spec, s: 1.0) == pytest.approx(math.pi)
