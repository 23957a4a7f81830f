"""
Tests for differential operators and their symbols
"""

from fractions import Fraction

import pytest

from nctorus_curvature.core import D, SymbolExpr, op, op_sum, operator_to_symbol
from nctorus_curvature.core.operators import homogeneous_parts
from nctorus_curvature.core.words import dk


def _xi(j, power=1):
    return SymbolExpr.xi(3, j, power)


def _k(r):
    return SymbolExpr.k(3, r)


class TestOperatorSymbols:
    """Symbols of operator words"""

    def test_second_derivative(self):
        """Test the symbol of delta_1 delta_1"""
        assert operator_to_symbol(op(3, D(1), D(1)))[0, 0] == _xi(1, 2)

    def test_multiplication_on_the_left(self):
        """Test the symbol of k delta_2"""
        assert operator_to_symbol(op(3, 1, D(2)))[0, 0] == _k(1) * _xi(2)

    def test_multiplication_on_the_right(self):
        """Test the symbol of delta_1 k"""
        # delta_1 k = delta_1(k) + k delta_1
        expected = SymbolExpr.word(3, [dk(1)]) + _xi(1) * _k(1)
        assert operator_to_symbol(op(3, D(1), 1))[0, 0] == expected

    def test_coefficient(self):
        """Test a rational coefficient"""
        symbol = operator_to_symbol(op(3, D(3), D(3), coeff=Fraction(-1, 2)))[0, 0]
        assert symbol == _xi(3, 2).scale(Fraction(-1, 2))

    def test_order_limit(self):
        """Test rejection of third-order operators"""
        with pytest.raises(ValueError, match="Operator order 3 exceeds"):
            operator_to_symbol(op(3, D(1), D(2), D(3)))

    def test_grid(self):
        """Test symbols of a matrix of operators"""
        grid = [[op(3, D(1), D(1)), op(3, D(1))], [op(3, D(2)), op(3, 2)]]
        symbol = operator_to_symbol(grid)
        assert symbol.size == 2
        assert symbol[1, 1] == _k(2)


class TestOperatorArithmetic:
    """Sums, scaling and order"""

    def test_sum_and_order(self):
        """Test sums of operator words"""
        total = op_sum(3, [op(3, D(1), D(1)), op(3, D(2))])
        assert total.order == 2
        assert operator_to_symbol(total)[0, 0] == _xi(1, 2) + _xi(2)

    def test_difference_cancels(self):
        """Test that a - a has symbol zero"""
        a = op(3, 2, D(1), D(1))
        assert operator_to_symbol(a - a)[0, 0].is_zero

    def test_homogeneous_parts(self):
        """Test the split into a2, a1 and a0"""
        a2, a1, a0 = homogeneous_parts(operator_to_symbol(op(3, D(1), 2, D(1))))
        assert a2[0, 0] == _k(2) * _xi(1, 2)
        assert not a1[0, 0].is_zero
        assert a0.is_zero
