"""
Tests for symbol expressions, derivations and the printed notation
"""

from fractions import Fraction

import numpy as np
import pytest

from nctorus_curvature.core import SymbolExpr, delta, xi_partial
from nctorus_curvature.core.notation import format_term, parse_radial, parse_symbol
from nctorus_curvature.core.notation import term_line
from nctorus_curvature.core.symbols import sum_exprs
from nctorus_curvature.core.words import B0, b0, b0u, canonical, dk, join, kpow

N = 3
SEEDS = range(20)


def word(*atoms, coeff=1, xi=None):
    return SymbolExpr.word(N, atoms, coeff, xi)


def random_atom(rng, second_order=False):
    kind = rng.integers(0, 3)
    if kind == 0:
        return kpow(int(rng.choice([-2, -1, 1, 2, 3])))
    if kind == 1:
        return b0(int(rng.integers(1, 3)))
    if second_order and rng.integers(0, 2):
        return dk(int(rng.integers(1, N + 1)), int(rng.integers(1, N + 1)))
    return dk(int(rng.integers(1, N + 1)))


def random_term(rng, atoms):
    coeff = Fraction(int(rng.choice([-3, -2, -1, 1, 2, 3])), int(rng.integers(1, 5)))
    xi = tuple(int(e) for e in rng.integers(0, 3, size=N))
    return SymbolExpr.word(N, atoms, coeff, xi)


def random_expr(rng, trailing_b0=True):
    """A sum of up to three terms over k powers, b0 and first derivatives of k"""
    terms = []
    for _ in range(int(rng.integers(1, 4))):
        atoms = list(canonical(random_atom(rng) for _ in range(int(rng.integers(1, 5)))))
        if not trailing_b0 and atoms and atoms[-1].kind == B0:
            atoms.append(dk(int(rng.integers(1, N + 1))))
        terms.append(random_term(rng, atoms))
    return sum_exprs(N, terms)


def random_k_expr(rng):
    """A sum of terms c xi^a k^r"""
    return sum_exprs(
        N,
        (
            random_term(rng, [kpow(int(rng.choice([-3, -2, -1, 1, 2, 3, 4])))])
            for _ in range(int(rng.integers(1, 4)))
        ),
    )


class TestDelta:
    """Leibniz rule for delta_j"""

    def test_power_of_k(self):
        """Test delta_1(k^2) = d1(k) k + k d1(k)"""
        assert delta(1, SymbolExpr.k(N, 2)) == word(dk(1), kpow(1)) + word(kpow(1), dk(1))

    def test_inverse_power_of_k(self):
        """Test the derivative of the inverse"""
        assert delta(2, SymbolExpr.k(N, -1)) == word(kpow(-1), dk(2), kpow(-1), coeff=-1)

    def test_second_derivative(self):
        """Test that delta_2 of d1(k) gives d12(k)"""
        assert delta(2, word(dk(1))) == word(dk(1, 2))

    def test_third_derivative_rejected(self):
        """Test rejection of third derivatives of k"""
        with pytest.raises(ValueError, match="third derivative of k"):
            delta(1, word(dk(1, 2)))

    def test_b0_needs_metric(self):
        """Test that delta of b0 needs the metric"""
        with pytest.raises(ValueError, match="leading powers"):
            delta(1, SymbolExpr.b0(N))

    def test_b0_with_metric(self, conformal2):
        """Test delta_1(b0) = -b0 delta_1(a2) b0 on the 2-torus"""
        expr = delta(1, SymbolExpr.b0(2), conformal2)
        expected = SymbolExpr.zero(2)
        for xi in ((2, 0), (0, 2)):
            for atoms in ([b0(1), dk(1), kpow(1), b0(1)], [b0(1), kpow(1), dk(1), b0(1)]):
                expected = expected + SymbolExpr.word(2, atoms, -1, xi)
        assert expr == expected

    def test_invalid_direction(self):
        """Test rejection of a direction beyond the dimension"""
        with pytest.raises(ValueError, match="Invalid direction"):
            delta(4, SymbolExpr.k(N, 1))

    def test_radial_stage_rejected(self):
        """Test that delta refuses radial-stage atoms"""
        with pytest.raises(ValueError, match="symbol stage only"):
            delta(1, word(b0u(1)))


class TestDerivationLaws:
    """Leibniz rule, commutation and normal forms on random symbols"""

    @pytest.mark.parametrize("seed", SEEDS)
    @pytest.mark.parametrize("metric_name", ["conformal3", "nonconformal3"])
    def test_leibniz(self, seed, metric_name, request):
        """Test delta_j(x y) = delta_j(x) y + x delta_j(y)"""
        metric = request.getfixturevalue(metric_name)
        rng = np.random.default_rng(seed)
        # k and b0 commute inside a run, so x ends in a run without b0
        x = random_expr(rng, trailing_b0=False)
        y = random_expr(rng)
        for j in range(1, N + 1):
            lhs = delta(j, x * y, metric)
            rhs = delta(j, x, metric) * y + x * delta(j, y, metric)
            assert lhs == rhs, (seed, j)

    @pytest.mark.parametrize("seed", SEEDS)
    def test_leibniz_without_b0(self, seed):
        """Test the Leibniz rule on arbitrary products of k and its derivatives"""
        rng = np.random.default_rng(seed)
        x, y = random_k_expr(rng), random_k_expr(rng)
        x = x * word(dk(int(rng.integers(1, N + 1))), kpow(int(rng.integers(-2, 3))))
        for j in range(1, N + 1):
            assert delta(j, x * y) == delta(j, x) * y + x * delta(j, y)

    @pytest.mark.parametrize("seed", SEEDS)
    def test_derivations_commute(self, seed):
        """Test delta_i delta_j = delta_j delta_i"""
        rng = np.random.default_rng(seed)
        e = random_k_expr(rng) * random_k_expr(rng)
        for i in range(1, N + 1):
            for j in range(i + 1, N + 1):
                assert delta(i, delta(j, e)) == delta(j, delta(i, e)), (seed, i, j)

    @pytest.mark.parametrize("seed", SEEDS)
    def test_normal_form_idempotent(self, seed):
        """Test that normalizing a normal form changes nothing"""
        rng = np.random.default_rng(seed)
        atoms = [random_atom(rng, second_order=True) for _ in range(6)]
        once = canonical(atoms)
        assert canonical(once) == once
        assert SymbolExpr.word(N, once) == SymbolExpr.word(N, atoms)

    @pytest.mark.parametrize("seed", SEEDS)
    def test_normal_form_respects_products(self, seed):
        """Test that the product of normal forms is the normal form of the product"""
        rng = np.random.default_rng(seed)
        left = [random_atom(rng, second_order=True) for _ in range(4)]
        right = [random_atom(rng, second_order=True) for _ in range(4)]
        assert join(canonical(left), canonical(right)) == canonical(left + right)
        assert SymbolExpr.word(N, left) * SymbolExpr.word(N, right) == SymbolExpr.word(
            N, left + right
        )

    @pytest.mark.parametrize("seed", SEEDS)
    def test_sums_of_normal_forms(self, seed):
        """Test that sums do not depend on how the words were written"""
        rng = np.random.default_rng(seed)
        atoms = [random_atom(rng) for _ in range(5)]
        shuffled_runs = [kpow(1), kpow(-1)] + atoms
        expr = SymbolExpr.word(N, atoms, 2) + SymbolExpr.word(N, shuffled_runs, -1)
        assert expr == SymbolExpr.word(N, canonical(atoms))


class TestXiPartial:
    """xi-derivatives of monomials and of b0"""

    def test_b0(self, conformal3):
        """Test d/dxi_1 of b0 on the conformal 3-torus"""
        assert xi_partial(1, SymbolExpr.b0(N), conformal3) == word(
            kpow(4), b0(2), coeff=-2, xi=(1, 0, 0)
        )

    def test_monomial(self, conformal3):
        """Test the power rule on xi monomials"""
        assert xi_partial(2, SymbolExpr.xi(N, 2, 3), conformal3) == SymbolExpr.xi(N, 2, 2).scale(3)

    def test_vertical_direction_of_nonconformal(self, nonconformal3):
        """Test that the unperturbed direction carries no power of k"""
        assert xi_partial(3, SymbolExpr.b0(N), nonconformal3) == word(
            b0(2), coeff=-2, xi=(0, 0, 1)
        )

    def test_xi_squared_b0(self, conformal3):
        """Test d/dxi_2 of xi_2^2 b0 by hand"""
        expr = SymbolExpr.xi(N, 2, 2) * SymbolExpr.b0(N)
        expected = word(b0(1), coeff=2, xi=(0, 1, 0)) + word(
            kpow(4), b0(2), coeff=-2, xi=(0, 3, 0)
        )
        assert xi_partial(2, expr, conformal3) == expected


class TestArithmetic:
    """Sums and products of symbol expressions"""

    def test_like_terms_cancel(self):
        """Test that opposite terms cancel to zero"""
        expr = word(kpow(1)) - word(kpow(1))
        assert expr.is_zero
        assert len(expr) == 0

    def test_product_joins_words(self):
        """Test that products add xi exponents and merge runs"""
        product = (SymbolExpr.xi(N, 1) * word(kpow(1))) * (SymbolExpr.xi(N, 1) * word(kpow(2)))
        assert product == word(kpow(3), xi=(2, 0, 0))

    def test_dimension_mismatch(self):
        """Test rejection of mixed dimensions"""
        with pytest.raises(ValueError, match="dimensions"):
            SymbolExpr.k(3, 1) + SymbolExpr.k(2, 1)

    def test_homogeneous_part(self):
        """Test extraction of the part of fixed xi-degree"""
        expr = SymbolExpr.xi(N, 1, 2) + SymbolExpr.xi(N, 2) + SymbolExpr.constant(N, 5)
        assert expr.homogeneous(2) == SymbolExpr.xi(N, 1, 2)
        assert expr.max_xi_degree() == 2


class TestNotation:
    """Parsing and printing of the displayed notation"""

    def test_parse_simple_term(self):
        """Test parsing of a coefficient, xi powers and a word"""
        assert parse_symbol("2 x1^2 k^2 b0") == word(kpow(2), b0(1), coeff=2, xi=(2, 0, 0))

    def test_parse_expands_delta_of_power(self):
        """Test that d3(k^2) is expanded by the Leibniz rule"""
        assert parse_symbol("-1 d3(k^2)") == -(word(dk(3), kpow(1)) + word(kpow(1), dk(3)))

    def test_nested_and_flat_second_derivatives_agree(self):
        """Test d1(d1(k)) = d11(k)"""
        assert parse_symbol("b0 k d1(d1(k)) b0") == parse_symbol("b0 k d11(k) b0")

    def test_parse_radial(self):
        """Test parsing of a radial term with its power of u"""
        u_power, expr = parse_radial("u^2 b0^2 k d3(k) b0")
        assert u_power == 2
        assert expr == word(b0u(2), kpow(1), dk(3), b0u(1))

    def test_parse_rejects_unknown_token(self):
        """Test rejection of an unknown token"""
        with pytest.raises(ValueError, match="Cannot parse token 'y1'"):
            parse_symbol("2 y1 b0")

    def test_parse_rejects_empty(self):
        """Test rejection of an empty term"""
        with pytest.raises(ValueError, match="empty term"):
            parse_symbol("   ")

    def test_print_round_trip(self):
        """Test that a printed term parses back to itself"""
        text = "-4 x1^5 x3 k^2 b0^2 d1(k) b0"
        [term] = parse_symbol(text).terms()
        assert term_line(term) == text
        assert parse_symbol(term_line(term)) == parse_symbol(text)

    def test_format_radial_term(self):
        """Test printing of a radial term"""
        [term] = parse_symbol("3 b0 d3(k) b0").terms()
        line = format_term(term.coeff, word=term.word, u_power=Fraction(2), unicode=False)
        assert line == "3 u^2 b0 d3(k) b0"
