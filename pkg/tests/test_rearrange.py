"""
Tests for the rearrangement into F functions
"""

import math
import re
from fractions import Fraction

import pytest

from nctorus_curvature.core import Coefficient
from nctorus_curvature.core.spectral import CONFORMAL, NONCONFORMAL, FSpec, quadrature_F
from nctorus_curvature.core.words import b0u, dk, kpow, unit
from nctorus_curvature.rearrange import (
    FEvaluator,
    closed_F,
    coefficient_of,
    k_degree,
    normalize_spectral,
    rearrange_integrals,
    spec_from_name,
    to_spectral,
    verify_F,
)
from nctorus_curvature.reduce_integrals import RadialIntegral


class TestSpecFromName:
    """Parsing printed F names"""

    def test_conformal(self):
        """Test parsing of conformal F names"""
        spec = spec_from_name("F_{2,1}")
        assert spec == FSpec((2, 1), Fraction(3, 2), Fraction(2, 3), CONFORMAL)

    def test_nonconformal(self):
        """Test parsing of non-conformal F names"""
        spec = spec_from_name("F^[3]_{2,0,1}")
        assert spec.ms == (2, 0, 1)
        assert spec.nu == 3
        assert spec.family == NONCONFORMAL
        assert spec.arity == 2

    def test_name_roundtrip(self):
        """Test that names print back unchanged"""
        assert spec_from_name("F^[2]_{1,1,1}").name == "F^[2]_{1,1,1}"

    @pytest.mark.parametrize("name", ["G_{1}", "F_{}", "F^[x]_{1,1}", ""])
    def test_invalid(self, name):
        """Test rejection of malformed names"""
        with pytest.raises(ValueError, match="Invalid F-function name"):
            spec_from_name(name)


class TestRearrangement:
    """Radial integrals to k^prefix F(Delta)(operand)"""

    def test_single_derivative(self, nonconformal3):
        """Test the spectral form of a single derivative"""
        r = RadialIntegral(Coefficient(1), Fraction(0), (b0u(1), dk(1), b0u(1)))
        expr = to_spectral(r, nonconformal3)
        # k^(0 - 2 (0 + 1))
        assert expr.keys() == [(-2, (dk(1),))]
        normalized = normalize_spectral(expr, nonconformal3)
        assert normalized.keys() == [(-1, (unit(1),))]
        # int_0^inf (1 + u)^-2 du
        fn = coefficient_of(normalized, -1, (unit(1),))
        assert fn.evaluate((1.0,)) == pytest.approx(1.0)

    def test_k_power_moves_to_prefix(self, nonconformal3):
        """Test that powers of k move into the prefix"""
        r = RadialIntegral(Coefficient(1), Fraction(0), (b0u(1), dk(1), kpow(2), b0u(1)))
        normalized = rearrange_integrals([r], nonconformal3)
        assert normalized.keys() == [(1, (unit(1),))]
        # F(s) = log(s) / (s - 1) at s = 2, times Delta^1
        fn = coefficient_of(normalized, 1, (unit(1),))
        assert fn.evaluate((2.0,)) == pytest.approx(2 * math.log(2.0), rel=1e-9)

    def test_k_degree_preserved(self, nonconformal3):
        """Test that the total k-degree is preserved"""
        r = RadialIntegral(Coefficient(1), Fraction(0), (b0u(1), dk(1), kpow(2), b0u(1)))
        [(prefix, operand)] = to_spectral(r, nonconformal3).keys()
        [(new_prefix, units)] = rearrange_integrals([r], nonconformal3).keys()
        assert k_degree(prefix, operand) == k_degree(new_prefix, units)

    def test_terms_cancel(self, nonconformal3):
        """Test that opposite terms cancel"""
        word = (b0u(1), dk(1), b0u(1))
        integrals = [
            RadialIntegral(Coefficient(1), Fraction(0), word),
            RadialIntegral(Coefficient(-1), Fraction(0), word),
        ]
        assert rearrange_integrals(integrals, nonconformal3).is_zero

    def test_missing_coefficient_is_zero(self, nonconformal3):
        """Test the coefficient of an absent word"""
        fn = coefficient_of(rearrange_integrals([], nonconformal3), 0, (unit(1), unit(2)))
        assert fn.is_zero
        assert fn.arity == 2


class TestFEvaluator:
    """Backends and closed forms"""

    def test_invalid_backend(self):
        """Test rejection of an unknown backend"""
        with pytest.raises(ValueError, match="Invalid F backend: series"):
            FEvaluator("series")

    def test_class_default(self, monkeypatch):
        """Test that the class default backend applies"""
        monkeypatch.setattr(FEvaluator, "_default_backend", "closed")
        assert FEvaluator().backend == "closed"

    def test_closed_matches_quadrature(self):
        """Test closed forms against quadrature"""
        spec = spec_from_name("F_{2,1}")
        closed = FEvaluator("closed")(spec, (2.5,))
        assert closed == pytest.approx(quadrature_F(spec, (2.5,)), rel=1e-8)

    def test_closed_falls_back_near_singular_locus(self):
        """Test the quadrature fallback at Delta = 1"""
        spec = spec_from_name("F_{2,1}")
        assert FEvaluator("closed")(spec, (1.0,)) == pytest.approx(spec.at_unity(), rel=1e-9)

    def test_unknown_closed_form(self):
        """Test the error for an F without closed form"""
        with pytest.raises(ValueError, match=re.escape("Unknown F-function 'F_{9,9}'")):
            closed_F("F_{9,9}")

    def test_verify_subset(self):
        """Test verification of a few closed forms"""
        results = verify_F(n_points=5, names=["F_{1,1}", "F^[3]_{2,1}", "F_{1,1,1}"])
        assert [r.name for r in results] == ["F_{1,1}", "F^[3]_{2,1}", "F_{1,1,1}"]
        assert all(r.passed for r in results), [r.detail for r in results]
