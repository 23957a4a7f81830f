"""
Tests for the registered metrics and their parametrices
"""

import pytest

from nctorus_curvature.core import ONE_FORM, SCALAR, get_metric
from nctorus_curvature.resolvent import compute_b1, compute_b2, homogeneity_defects
from nctorus_curvature.resolvent import parametrix_check


class TestMetrics:
    """Operator data of the three metrics"""

    @pytest.mark.parametrize("name", ["conformal3", "nonconformal3", "conformal2"])
    def test_principal_symbol(self, name):
        """Test that the principal symbol is a2 times the identity"""
        get_metric(name).validate(SCALAR)

    @pytest.mark.parametrize("name", ["conformal3", "nonconformal3"])
    def test_one_form_principal_symbol(self, name):
        """Test the principal symbol of the 1-form Laplacian"""
        metric = get_metric(name)
        metric.validate(ONE_FORM)
        assert metric.symbol(ONE_FORM).size == 3

    def test_conformal2_has_no_one_form_laplacian(self, conformal2):
        """Test that the 2-torus has no 1-form Laplacian"""
        with pytest.raises(ValueError, match="has no 1-form Laplacian"):
            conformal2.operator(ONE_FORM)

    def test_invalid_kind(self, conformal3):
        """Test rejection of an unknown operator kind"""
        with pytest.raises(ValueError, match="Invalid operator kind"):
            conformal3.operator("two_form")

    def test_leading_powers(self, conformal3, nonconformal3, conformal2):
        """Test the powers of k in front of xi_j^2"""
        assert conformal3.leading_powers == (4, 4, 4)
        assert nonconformal3.leading_powers == (2, 2, 0)
        assert conformal2.leading_powers == (2, 2)

    def test_f_power(self, conformal3, nonconformal3):
        """Test the power of Delta in the expansional f"""
        assert conformal3.f_power == pytest.approx(2 / 3)
        assert nonconformal3.f_power == 1

    def test_flat_metric(self, flat3):
        """Test the principal symbol of the flat metric"""
        flat3.validate(SCALAR)
        assert flat3.a2_scalar().max_xi_degree() == 2


class TestParametrix:
    """b0 + b1 + b2 inverts the symbol up to order -2"""

    @pytest.mark.parametrize("name", ["conformal3", "nonconformal3", "conformal2"])
    def test_scalar(self, name):
        """Test the parametrix of the Laplacian on functions"""
        assert parametrix_check(get_metric(name), SCALAR) == {0: True, -1: True, -2: True}

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["conformal3", "nonconformal3"])
    def test_one_form(self, name):
        """Test the parametrix of the Laplacian on 1-forms"""
        assert parametrix_check(get_metric(name), ONE_FORM) == {0: True, -1: True, -2: True}

    def test_flat(self, flat3):
        """Test that the flat parametrix has no lower terms"""
        assert parametrix_check(flat3, SCALAR) == {0: True, -1: True, -2: True}
        assert compute_b1(flat3, SCALAR).is_zero
        assert compute_b2(flat3, SCALAR).is_zero

    @pytest.mark.parametrize("name", ["conformal3", "nonconformal3", "conformal2"])
    def test_homogeneity(self, name):
        """Test that b1 and b2 have orders -3 and -4"""
        metric = get_metric(name)
        assert homogeneity_defects(compute_b1(metric, SCALAR), -3) == []
        assert homogeneity_defects(compute_b2(metric, SCALAR), -4) == []
