"""
Symbol expressions: sums of coefficient x xi-monomial x word

The derivations delta_j act on the algebra part through the Leibniz rule; the
xi-derivatives act on monomials and on the resolvent factor b0.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import (
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Optional,
    Protocol,
    Sequence,
    Tuple,
    Union,
)

from .coefficients import Coefficient
from .words import B0, B0U, DK, DLOGK, KPOW, UNIT, Atom, Word, b0, canonical, dk, join, kpow

XiMonomial = Tuple[int, ...]
Key = Tuple[XiMonomial, Word]
Scalar = Union[int, Fraction]


class HasLeadingPowers(Protocol):
    """Anything exposing the k-powers c_j of a_2 = sum_j k^(c_j) xi_j^2"""

    @property
    def leading_powers(self) -> Tuple[int, ...]: ...


@dataclass(frozen=True)
class Term:
    """A single term of a symbol expression"""

    coeff: Coefficient
    xi: XiMonomial
    word: Word

    @property
    def xi_degree(self) -> int:
        return sum(self.xi)


class SymbolExpr:
    """A finite sum of terms with like terms combined"""

    __slots__ = ("dimension", "_terms")

    def __init__(self, dimension: int, terms: Optional[Dict[Key, Fraction]] = None):
        self.dimension = dimension
        self._terms: Dict[Key, Fraction] = {}
        for key, value in (terms or {}).items():
            if value:
                self._terms[key] = Fraction(value)

    @classmethod
    def _wrap(cls, dimension: int, terms: Dict[Key, Fraction]) -> "SymbolExpr":
        expr = cls.__new__(cls)
        expr.dimension = dimension
        expr._terms = {k: v for k, v in terms.items() if v}
        return expr

    # construction -------------------------------------------------------

    @classmethod
    def zero(cls, dimension: int) -> "SymbolExpr":
        return cls._wrap(dimension, {})

    @classmethod
    def constant(cls, dimension: int, value: Scalar = 1) -> "SymbolExpr":
        return cls._wrap(dimension, {((0,) * dimension, ()): Fraction(value)})

    @classmethod
    def word(
        cls,
        dimension: int,
        atoms: Iterable[Atom],
        coeff: Scalar = 1,
        xi: Optional[XiMonomial] = None,
    ) -> "SymbolExpr":
        monomial = tuple(xi) if xi is not None else (0,) * dimension
        if len(monomial) != dimension:
            raise ValueError(f"Invalid xi monomial {monomial} for dimension {dimension}")
        return cls._wrap(dimension, {(monomial, canonical(atoms)): Fraction(coeff)})

    @classmethod
    def xi(cls, dimension: int, j: int, power: int = 1) -> "SymbolExpr":
        monomial = [0] * dimension
        monomial[j - 1] = power
        return cls._wrap(dimension, {(tuple(monomial), ()): Fraction(1)})

    @classmethod
    def k(cls, dimension: int, r: int) -> "SymbolExpr":
        return cls.word(dimension, [kpow(r)])

    @classmethod
    def b0(cls, dimension: int, m: int = 1) -> "SymbolExpr":
        return cls.word(dimension, [b0(m)])

    # inspection ---------------------------------------------------------

    def items(self) -> List[Tuple[Key, Fraction]]:
        """Terms in the canonical sorted order"""
        return sorted(self._terms.items())

    def terms(self) -> List[Term]:
        return [Term(Coefficient(c), xi, word) for (xi, word), c in self.items()]

    def coefficient(self, xi: XiMonomial, word: Word) -> Fraction:
        return self._terms.get((tuple(xi), canonical(word)), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Term]:
        return iter(self.terms())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymbolExpr):
            return NotImplemented
        return self.dimension == other.dimension and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        from .notation import format_expr

        return f"SymbolExpr({format_expr(self)})"

    # arithmetic ---------------------------------------------------------

    def _check(self, other: "SymbolExpr") -> None:
        if self.dimension != other.dimension:
            raise ValueError(
                f"Cannot combine symbols of dimensions {self.dimension} and {other.dimension}"
            )

    def __add__(self, other: "SymbolExpr") -> "SymbolExpr":
        self._check(other)
        out = dict(self._terms)
        for key, value in other._terms.items():
            out[key] = out.get(key, Fraction(0)) + value
        return SymbolExpr._wrap(self.dimension, out)

    def __neg__(self) -> "SymbolExpr":
        return SymbolExpr._wrap(self.dimension, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "SymbolExpr") -> "SymbolExpr":
        return self + (-other)

    def scale(self, factor: Scalar) -> "SymbolExpr":
        return SymbolExpr._wrap(self.dimension, {k: v * factor for k, v in self._terms.items()})

    def __mul__(self, other: Union["SymbolExpr", Scalar]) -> "SymbolExpr":
        if not isinstance(other, SymbolExpr):
            return self.scale(other)
        self._check(other)
        out: Dict[Key, Fraction] = {}
        for (xi1, w1), c1 in self._terms.items():
            for (xi2, w2), c2 in other._terms.items():
                key = (tuple(a + b for a, b in zip(xi1, xi2)), join(w1, w2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return SymbolExpr._wrap(self.dimension, out)

    def __rmul__(self, other: Scalar) -> "SymbolExpr":
        return self.scale(other)

    # filters ------------------------------------------------------------

    def select(self, predicate: Callable[[XiMonomial, Word], bool]) -> "SymbolExpr":
        return SymbolExpr._wrap(
            self.dimension, {k: v for k, v in self._terms.items() if predicate(*k)}
        )

    def homogeneous(self, xi_degree: int) -> "SymbolExpr":
        """The part of exact xi-degree"""
        return self.select(lambda xi, _word: sum(xi) == xi_degree)

    def max_xi_degree(self) -> int:
        return max((sum(xi) for xi, _ in self._terms), default=0)


def sum_exprs(dimension: int, exprs: Iterable[SymbolExpr]) -> SymbolExpr:
    out: Dict[Key, Fraction] = {}
    for expr in exprs:
        for key, value in expr._terms.items():
            out[key] = out.get(key, Fraction(0)) + value
    return SymbolExpr._wrap(dimension, out)


# derivations ------------------------------------------------------------

Piece = Tuple[Fraction, XiMonomial, Word]


def _zero_xi(dimension: int) -> XiMonomial:
    return (0,) * dimension


@lru_cache(maxsize=None)
def _delta_kpow(j: int, r: int) -> Tuple[Tuple[Fraction, Word], ...]:
    if r > 0:
        return tuple(
            (Fraction(1), canonical((kpow(i), dk(j), kpow(r - 1 - i)))) for i in range(r)
        )
    m = -r
    return tuple(
        (Fraction(-1), canonical((kpow(i - m), dk(j), kpow(-1 - i)))) for i in range(m)
    )


@lru_cache(maxsize=None)
def _delta_atom(
    j: int, atom: Atom, powers: Optional[Tuple[int, ...]], dimension: int
) -> Tuple[Piece, ...]:
    zero_xi = _zero_xi(dimension)
    if atom.kind == KPOW:
        pieces = _delta_kpow(j, atom.value)  # type: ignore[arg-type]
        return tuple((c, zero_xi, w) for c, w in pieces)
    if atom.kind == DK:
        alpha = atom.value
        if len(alpha) >= 2:  # type: ignore[arg-type]
            raise ValueError(
                f"delta_{j} of delta^{alpha}(k) would produce a third derivative of k, "
                "which is outside the supported calculus"
            )
        return ((Fraction(1), zero_xi, (dk(*alpha, j),)),)  # type: ignore[misc]
    if atom.kind == B0:
        if powers is None:
            raise ValueError("delta of b0 needs the metric's leading powers of a_2")
        m: int = atom.value  # type: ignore[assignment]
        pieces: List[Piece] = []
        for i in range(m):
            for l, c_l in enumerate(powers):
                if c_l == 0:
                    continue
                xi = list(zero_xi)
                xi[l] = 2
                for c, w in _delta_kpow(j, c_l):
                    word = canonical((b0(i + 1),) + w + (b0(m - i),))
                    pieces.append((-c, tuple(xi), word))
        return tuple(pieces)
    raise ValueError(
        f"delta acts at the symbol stage only; got a {atom.kind} atom "
        f"({'radial' if atom.kind == B0U else 'spectral'} stage)"
    )


def delta(j: int, expr: SymbolExpr, metric: Optional[HasLeadingPowers] = None) -> SymbolExpr:
    """Apply the derivation delta_j by the Leibniz rule"""
    if not 1 <= j <= expr.dimension:
        raise ValueError(f"Invalid direction {j} for dimension {expr.dimension}")
    powers = tuple(metric.leading_powers) if metric is not None else None
    out: Dict[Key, Fraction] = {}
    for (xi, word), c in expr._terms.items():
        for p, atom in enumerate(word):
            for c2, xi2, piece in _delta_atom(j, atom, powers, expr.dimension):
                new_xi = tuple(a + b for a, b in zip(xi, xi2))
                key = (new_xi, canonical(word[:p] + piece + word[p + 1 :]))
                out[key] = out.get(key, Fraction(0)) + c * c2
    return SymbolExpr._wrap(expr.dimension, out)


def xi_partial(j: int, expr: SymbolExpr, metric: HasLeadingPowers) -> SymbolExpr:
    """Apply the xi-derivative d/dxi_j, using d_j(b0^m) = -2m xi_j k^(c_j) b0^(m+1)"""
    if not 1 <= j <= expr.dimension:
        raise ValueError(f"Invalid direction {j} for dimension {expr.dimension}")
    c_j = metric.leading_powers[j - 1]
    out: Dict[Key, Fraction] = {}

    def add(key: Key, value: Fraction) -> None:
        out[key] = out.get(key, Fraction(0)) + value

    for (xi, word), c in expr._terms.items():
        e = xi[j - 1]
        if e:
            lowered = xi[: j - 1] + (e - 1,) + xi[j:]
            add((lowered, word), c * e)
        raised = xi[: j - 1] + (e + 1,) + xi[j:]
        for p, atom in enumerate(word):
            if atom.kind == B0:
                m: int = atom.value  # type: ignore[assignment]
                new_word = canonical(word[:p] + (kpow(c_j), b0(m + 1)) + word[p + 1 :])
                add((raised, new_word), c * (-2 * m))
            elif atom.kind in (B0U, UNIT, DLOGK):
                raise ValueError(
                    f"xi-derivatives act at the symbol stage only; got a {atom.kind} atom"
                )
    return SymbolExpr._wrap(expr.dimension, out)


def xi_partial_multi(
    alpha: Sequence[int], expr: SymbolExpr, metric: HasLeadingPowers
) -> SymbolExpr:
    for j in alpha:
        expr = xi_partial(j, expr, metric)
    return expr


def delta_multi(
    alpha: Sequence[int], expr: SymbolExpr, metric: Optional[HasLeadingPowers] = None
) -> SymbolExpr:
    for j in alpha:
        expr = delta(j, expr, metric)
    return expr


# matrices ---------------------------------------------------------------


class MatrixSymbol:
    """A square grid of symbol expressions"""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[SymbolExpr]]):
        self.rows: Tuple[Tuple[SymbolExpr, ...], ...] = tuple(tuple(r) for r in rows)
        if any(len(r) != len(self.rows) for r in self.rows):
            raise ValueError("Matrix symbols must be square")

    @classmethod
    def scalar(cls, expr: SymbolExpr, size: int = 1) -> "MatrixSymbol":
        zero = SymbolExpr.zero(expr.dimension)
        return cls([[expr if i == j else zero for j in range(size)] for i in range(size)])

    @classmethod
    def identity(cls, size: int, dimension: int) -> "MatrixSymbol":
        return cls.scalar(SymbolExpr.constant(dimension), size)

    @classmethod
    def zeros(cls, size: int, dimension: int) -> "MatrixSymbol":
        return cls.scalar(SymbolExpr.zero(dimension), size)

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def dimension(self) -> int:
        return self.rows[0][0].dimension

    def __getitem__(self, index: Tuple[int, int]) -> SymbolExpr:
        i, j = index
        return self.rows[i][j]

    def entries(self) -> Iterator[Tuple[int, int, SymbolExpr]]:
        for i, row in enumerate(self.rows):
            for j, expr in enumerate(row):
                yield i, j, expr

    def map(self, fn: Callable[[SymbolExpr], SymbolExpr]) -> "MatrixSymbol":
        return MatrixSymbol([[fn(e) for e in row] for row in self.rows])

    def __add__(self, other: "MatrixSymbol") -> "MatrixSymbol":
        return MatrixSymbol(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __neg__(self) -> "MatrixSymbol":
        return self.map(lambda e: -e)

    def __sub__(self, other: "MatrixSymbol") -> "MatrixSymbol":
        return self + (-other)

    def scale(self, factor: Scalar) -> "MatrixSymbol":
        return self.map(lambda e: e.scale(factor))

    def __matmul__(self, other: "MatrixSymbol") -> "MatrixSymbol":
        n = self.size

        def entry(i: int, j: int) -> SymbolExpr:
            return sum_exprs(self.dimension, (self[i, l] * other[l, j] for l in range(n)))

        return MatrixSymbol([[entry(i, j) for j in range(n)] for i in range(n)])

    def left(self, expr: SymbolExpr) -> "MatrixSymbol":
        """expr * M with expr a scalar symbol"""
        return self.map(lambda e: expr * e)

    def right(self, expr: SymbolExpr) -> "MatrixSymbol":
        """M * expr with expr a scalar symbol"""
        return self.map(lambda e: e * expr)

    def trace(self) -> SymbolExpr:
        return sum_exprs(self.dimension, (self[i, i] for i in range(self.size)))

    def homogeneous(self, xi_degree: int) -> "MatrixSymbol":
        return self.map(lambda e: e.homogeneous(xi_degree))

    @property
    def is_zero(self) -> bool:
        return all(e.is_zero for row in self.rows for e in row)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixSymbol):
            return NotImplemented
        return self.rows == other.rows

    __hash__ = None  # type: ignore[assignment]
