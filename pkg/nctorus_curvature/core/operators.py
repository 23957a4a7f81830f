"""
Differential operators built from multiplications and derivations

An operator word is a product of steps read left to right, each step either a
multiplication by an algebra element or a derivation delta_j. Its symbol is
obtained by expanding the product and replacing delta_j by xi_j.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from .symbols import MatrixSymbol, SymbolExpr, delta, sum_exprs

MAX_ORDER = 2


@dataclass(frozen=True)
class Derivation:
    """The derivation delta_j"""

    direction: int


@dataclass(frozen=True, eq=False)
class Multiplication:
    """Left multiplication by a xi-free algebra element"""

    element: SymbolExpr


Step = Union[Derivation, Multiplication]


@dataclass(frozen=True, eq=False)
class OperatorWord:
    """coeff * step_1 step_2 ... step_n"""

    steps: Tuple[Step, ...]
    coeff: Fraction = Fraction(1)

    @property
    def order(self) -> int:
        return sum(1 for s in self.steps if isinstance(s, Derivation))


@dataclass(frozen=True, eq=False)
class Operator:
    """A sum of operator words on a torus of the given dimension"""

    dimension: int
    words: Tuple[OperatorWord, ...] = field(default_factory=tuple)

    def __add__(self, other: "Operator") -> "Operator":
        return Operator(self.dimension, self.words + other.words)

    def __neg__(self) -> "Operator":
        return self.scale(-1)

    def __sub__(self, other: "Operator") -> "Operator":
        return self + (-other)

    def scale(self, factor: Union[int, Fraction]) -> "Operator":
        return Operator(
            self.dimension, tuple(OperatorWord(w.steps, w.coeff * factor) for w in self.words)
        )

    @property
    def order(self) -> int:
        return max((w.order for w in self.words), default=0)


# builders ---------------------------------------------------------------


def D(j: int) -> Derivation:
    return Derivation(j)


def mul(element: SymbolExpr) -> Multiplication:
    return Multiplication(element)


def op(dimension: int, *steps: Union[Step, int], coeff: Union[int, Fraction] = 1) -> Operator:
    """
    Build a one-word operator.

    Integer steps are shorthand for multiplication by that power of k, so
    op(3, 3, D(1), -2, D(1), 3) is k^3 delta_1 k^-2 delta_1 k^3.
    """
    resolved: List[Step] = []
    for step in steps:
        if isinstance(step, int):
            resolved.append(Multiplication(SymbolExpr.k(dimension, step)))
        else:
            resolved.append(step)
    return Operator(dimension, (OperatorWord(tuple(resolved), Fraction(coeff)),))


def op_sum(dimension: int, operators: Sequence[Operator]) -> Operator:
    words: Tuple[OperatorWord, ...] = ()
    for o in operators:
        words += o.words
    return Operator(dimension, words)


# symbols ----------------------------------------------------------------


def word_symbol(word: OperatorWord, dimension: int) -> SymbolExpr:
    """Symbol of a single operator word, folding the steps from the right"""
    if word.order > MAX_ORDER:
        raise ValueError(f"Operator order {word.order} exceeds the supported order {MAX_ORDER}")
    symbol = SymbolExpr.constant(dimension)
    for step in reversed(word.steps):
        if isinstance(step, Derivation):
            j = step.direction
            symbol = delta(j, symbol) + SymbolExpr.xi(dimension, j) * symbol
        else:
            symbol = step.element * symbol
    return symbol.scale(word.coeff)


def operator_to_symbol(operator: Union[Operator, Sequence[Sequence[Operator]]]) -> MatrixSymbol:
    """
    Full symbol of a scalar operator (as a 1x1 matrix) or of a square grid of
    operators acting on vector-valued functions.
    """
    if isinstance(operator, Operator):
        grid: Sequence[Sequence[Operator]] = [[operator]]
    else:
        grid = operator
    rows = []
    for row in grid:
        rows.append(
            [
                sum_exprs(o.dimension, (word_symbol(w, o.dimension) for w in o.words))
                for o in row
            ]
        )
    return MatrixSymbol(rows)


def homogeneous_parts(symbol: MatrixSymbol) -> Tuple[MatrixSymbol, MatrixSymbol, MatrixSymbol]:
    """Split a second order symbol into (a_2, a_1, a_0)"""
    return symbol.homogeneous(2), symbol.homogeneous(1), symbol.homogeneous(0)
