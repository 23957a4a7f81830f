"""
Abstract base class for metric implementations
"""

from abc import ABC, abstractmethod
from fractions import Fraction
from functools import cached_property
from typing import List, Optional, Tuple

from .coefficients import Coefficient
from .operators import Operator, homogeneous_parts, operator_to_symbol
from .symbols import MatrixSymbol, SymbolExpr, sum_exprs

SCALAR = "scalar"
ONE_FORM = "one_form"

OperatorGrid = List[List[Operator]]


class BaseMetric(ABC):
    """
    A perturbed metric on a noncommutative torus, described by the Laplacians it
    induces on functions and on 1-forms, after conjugation by k.
    """

    @property
    @abstractmethod
    def metric_name(self) -> str:
        """Return the name of this metric (e.g. 'conformal3')"""
        pass

    @property
    @abstractmethod
    def dimension(self) -> int:
        pass

    @property
    @abstractmethod
    def leading_powers(self) -> Tuple[int, ...]:
        """The k-powers c_j with a_2 = sum_j k^(c_j) xi_j^2"""
        pass

    @property
    @abstractmethod
    def modular_exponent(self) -> int:
        """e such that the modular operator is x -> k^-e x k^e"""
        pass

    @property
    @abstractmethod
    def radial_power(self) -> int:
        """a such that the reduced resolvent is b0(u) = (1 + u k^a)^-1"""
        pass

    @property
    @abstractmethod
    def log_scale(self) -> Fraction:
        """log k = log_scale * h for the Weyl factor h"""
        pass

    @property
    @abstractmethod
    def normalization(self) -> Coefficient:
        """(2 pi)^-n / Gamma((4 - n) / 2), the prefactor of the density a_2"""
        pass

    @property
    @abstractmethod
    def density_pi_half(self) -> int:
        """Power of pi (in half steps) factored out of the reported densities"""
        pass

    @property
    @abstractmethod
    def reduction(self) -> str:
        """'spherical' or 'cylindrical' xi-integration"""
        pass

    @abstractmethod
    def function_operator(self) -> Operator:
        """The Laplacian on functions"""
        pass

    def one_form_operator(self) -> Optional[OperatorGrid]:
        """The Laplacian on 1-forms, if this metric defines one"""
        return None

    # derived data -------------------------------------------------------

    @property
    def f_power(self) -> Fraction:
        """Exponent of the modular variables inside the rearranged integrals"""
        return Fraction(self.radial_power, self.modular_exponent)

    def a2_scalar(self) -> SymbolExpr:
        n = self.dimension
        return sum_exprs(
            n,
            (
                SymbolExpr.k(n, c) * SymbolExpr.xi(n, j, 2)
                for j, c in enumerate(self.leading_powers, start=1)
            ),
        )

    def operator(self, kind: str = SCALAR) -> Operator | OperatorGrid:
        if kind == SCALAR:
            return self.function_operator()
        if kind == ONE_FORM:
            grid = self.one_form_operator()
            if grid is None:
                raise ValueError(f"Metric '{self.metric_name}' has no 1-form Laplacian")
            return grid
        raise ValueError(f"Invalid operator kind: {kind}")

    @cached_property
    def _symbols(self) -> dict:
        return {}

    def symbol(self, kind: str = SCALAR) -> MatrixSymbol:
        """Full symbol of the Laplacian of the given kind, cached per metric"""
        if kind not in self._symbols:
            self._symbols[kind] = operator_to_symbol(self.operator(kind))
        return self._symbols[kind]

    def homogeneous_parts(
        self, kind: str = SCALAR
    ) -> Tuple[MatrixSymbol, MatrixSymbol, MatrixSymbol]:
        """(a_2, a_1, a_0) of the Laplacian of the given kind"""
        return homogeneous_parts(self.symbol(kind))

    def validate(self, kind: str = SCALAR) -> None:
        """
        Check that the principal symbol is a_2 times the identity.

        Raises:
            ValueError: If the operator words disagree with the leading powers
        """
        a2, _, _ = self.homogeneous_parts(kind)
        expected = MatrixSymbol.scalar(self.a2_scalar(), a2.size)
        if a2 != expected:
            raise ValueError(
                f"Principal symbol of the {kind} Laplacian of '{self.metric_name}' "
                f"is not sum_j k^c_j xi_j^2 with c = {self.leading_powers}"
            )
