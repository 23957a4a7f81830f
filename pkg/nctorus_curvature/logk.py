"""
Translation from derivatives of k to derivatives of log k

With k = exp(L) and the modular operator x -> k^-e x k^e,

    k^-1 delta_j(k) = f(Delta)(delta_j L),
    k^-1 delta_i delta_j(k) = f(Delta)(delta_i delta_j L)
                              + g(Delta_(1), Delta_(2))(delta_i L . delta_j L)
                              + g(Delta_(1), Delta_(2))(delta_j L . delta_i L),

where f(x) = int_0^1 x^(u/e) du and g(x, y) = int_0^1 int_0^u x^(u/e) y^(v/e) dv du.
For i = j the last two terms coincide and give the factor 2g.
"""

import logging
import math
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from .core import Coefficient
from .core.notation import format_atom
from .core.spectral import (
    NABLA_COORDINATES,
    Factor,
    FEvaluator,
    Group,
    SpectralFunction,
)
from .core.words import DLOGK, UNIT, Atom, Word, dlogk
from .rearrange import SpectralExpr

logger = logging.getLogger(__name__)

ANTI = "anti"
COMM = "comm"

Expansion = Tuple[Tuple[Atom, ...], str]


def _expansions(atom: Atom) -> List[Expansion]:
    if atom.kind != UNIT:
        raise ValueError(f"Only k^-1 delta(k) units can be translated to log k, got {atom}")
    alpha = atom.value
    if len(alpha) == 1:  # type: ignore[arg-type]
        return [((dlogk(*alpha),), "f")]  # type: ignore[misc]
    if len(alpha) == 2:  # type: ignore[arg-type]
        i, j = alpha  # type: ignore[misc]
        return [
            ((dlogk(i, j),), "f"),
            ((dlogk(i), dlogk(j)), "g"),
            ((dlogk(j), dlogk(i)), "g"),
        ]
    raise ValueError(f"Derivatives of order {len(alpha)} of k cannot be translated")  # type: ignore


def _split(
    fn: SpectralFunction, mapping: Sequence[Group], factors: Sequence[Factor], arity: int
) -> SpectralFunction:
    return fn.map_monomials(lambda m: m.split(mapping, factors, arity), arity=arity)


def translate(expr: SpectralExpr, width: int) -> SpectralExpr:
    """
    Rewrite every unit k^-1 delta^alpha(k) through f and g.

    Args:
        expr: normalized spectral expression over unit atoms
        width: the modular exponent e of the metric

    Raises:
        ValueError: If an operand holds anything but units of order 1 or 2
    """
    out = SpectralExpr()
    for prefix, operand, fn in expr.terms():
        for choice in product(*(_expansions(atom) for atom in operand)):
            mapping: List[Group] = []
            factors: List[Factor] = []
            atoms: List[Atom] = []
            for pieces, name in choice:
                slots = tuple(range(len(atoms), len(atoms) + len(pieces)))
                mapping.append(slots)
                factors.append(Factor(name, tuple((v,) for v in slots), width))
                atoms.extend(pieces)
            out.add_term(prefix, tuple(atoms), _split(fn, mapping, factors, len(atoms)))
    logger.debug(f"Translated {len(expr)} spectral terms into {len(out)} log k terms")
    return out


# curvature expressions --------------------------------------------------


class CurvatureKey(NamedTuple):
    """k^prefix times a basis word; two-atom words carry a bracket tag"""

    prefix: int
    word: Word
    bracket: Optional[str] = None


def _sort_key(key: CurvatureKey) -> Tuple:
    return (key.prefix, len(key.word), [a.value for a in key.word], key.bracket or "")


def format_key(key: CurvatureKey, unicode: bool = False) -> str:
    """e.g. 'k^-2 {d3(log k), d3(log k)}'"""
    atoms = [format_atom(a, unicode) for a in key.word]
    if key.bracket == ANTI:
        body = "{" + ", ".join(atoms) + "}"
    elif key.bracket == COMM:
        body = "[" + ", ".join(reversed(atoms)) + "]"
    else:
        body = " ".join(atoms)
    return body if key.prefix == 0 else f"k^{key.prefix} {body}"


OrderedWords = Dict[Tuple[int, Word], SpectralFunction]


class CurvatureExpression:
    """
    Sum of k^prefix W(nabla)(word) over basis words.

    A two-atom word (a, b) with a before b in direction order carries up to two
    entries: the anticommutator part W on {a, b} and the commutator part S on
    [b, a]. Values are reported in units of pi^(pi_half / 2).
    """

    def __init__(
        self, pi_half: int, entries: Optional[Dict[CurvatureKey, SpectralFunction]] = None
    ):
        self.pi_half = pi_half
        self._entries: Dict[CurvatureKey, SpectralFunction] = {}
        for key, fn in (entries or {}).items():
            self.add_entry(key, fn)

    def add_entry(self, key: CurvatureKey, fn: SpectralFunction) -> None:
        key = CurvatureKey(*key)
        total = self._entries[key] + fn if key in self._entries else fn
        if total.is_zero:
            self._entries.pop(key, None)
        else:
            self._entries[key] = total

    def items(self) -> Iterator[Tuple[CurvatureKey, SpectralFunction]]:
        for key in self.keys():
            yield key, self._entries[key]

    def keys(self) -> List[CurvatureKey]:
        return sorted(self._entries, key=_sort_key)

    def get(self, key: CurvatureKey) -> Optional[SpectralFunction]:
        return self._entries.get(CurvatureKey(*key))

    def __contains__(self, key: object) -> bool:
        return isinstance(key, tuple) and CurvatureKey(*key) in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    @property
    def is_zero(self) -> bool:
        return not self._entries

    def _check(self, other: "CurvatureExpression") -> None:
        if self.pi_half != other.pi_half:
            raise ValueError(
                f"Cannot combine curvature expressions in units pi^({Fraction(self.pi_half, 2)}) "
                f"and pi^({Fraction(other.pi_half, 2)})"
            )

    def __add__(self, other: "CurvatureExpression") -> "CurvatureExpression":
        self._check(other)
        out = CurvatureExpression(self.pi_half, dict(self._entries))
        for key, fn in other._entries.items():
            out.add_entry(key, fn)
        return out

    def __neg__(self) -> "CurvatureExpression":
        return self.scale(-1)

    def __sub__(self, other: "CurvatureExpression") -> "CurvatureExpression":
        return self + (-other)

    def scale(self, factor: Union[Coefficient, Fraction, int]) -> "CurvatureExpression":
        if not isinstance(factor, Coefficient):
            factor = Coefficient(Fraction(factor))
        return CurvatureExpression(
            self.pi_half, {key: fn.scale(factor) for key, fn in self._entries.items()}
        )

    def map_functions(
        self, fn: Callable[[SpectralFunction], SpectralFunction]
    ) -> "CurvatureExpression":
        return CurvatureExpression(self.pi_half, {k: fn(v) for k, v in self._entries.items()})

    def ordered(self) -> OrderedWords:
        """
        Coefficients of the plain ordered words.

        {a, b} W contributes W to both a.b and b.a, [b, a] S contributes -S to
        a.b and S to b.a, and {a, a} W contributes 2W to a.a.
        """
        out: OrderedWords = {}

        def add(prefix: int, word: Word, fn: SpectralFunction) -> None:
            key = (prefix, word)
            total = out[key] + fn if key in out else fn
            if total.is_zero:
                out.pop(key, None)
            else:
                out[key] = total

        for key, fn in self._entries.items():
            if key.bracket is None:
                add(key.prefix, key.word, fn)
                continue
            a, b = key.word
            if a == b:
                add(key.prefix, key.word, fn.scale(2))
            elif key.bracket == ANTI:
                add(key.prefix, (a, b), fn)
                add(key.prefix, (b, a), fn)
            else:
                add(key.prefix, (a, b), -fn)
                add(key.prefix, (b, a), fn)
        return out

    def __repr__(self) -> str:
        words = ", ".join(format_key(key) for key in self.keys())
        return f"CurvatureExpression(pi^({Fraction(self.pi_half, 2)}): {words or '0'})"


def _direction(atom: Atom) -> Tuple[int, ...]:
    return atom.value  # type: ignore[return-value]


def split_sym_antisym(expr: SpectralExpr, pi_half: int) -> CurvatureExpression:
    """
    Sort the log k words into the anticommutator/commutator basis.

    For a < b with coefficient c1 on a.b and c2 on b.a, {a, b} receives
    W = (c1 + c2) / 2 and [b, a] receives S = (c2 - c1) / 2, so that
    c1 = W - S and c2 = W + S. A squared word a.a with coefficient c becomes
    {a, a} with W = c / 2.

    Raises:
        ValueError: If a word has more than two atoms or atoms other than delta(log k)
    """
    half = Fraction(1, 2)
    out = CurvatureExpression(pi_half)
    for prefix, operand, fn in expr.terms():
        if any(atom.kind != DLOGK for atom in operand):
            raise ValueError("Only delta(log k) words can be split into brackets")
        if len(operand) <= 1:
            out.add_entry(CurvatureKey(prefix, operand), fn)
        elif len(operand) == 2:
            a, b = operand
            if a == b:
                out.add_entry(CurvatureKey(prefix, operand, ANTI), fn.scale(half))
                continue
            first, second = sorted(operand, key=_direction)
            word = (first, second)
            sign = -1 if operand == word else 1
            out.add_entry(CurvatureKey(prefix, word, ANTI), fn.scale(half))
            out.add_entry(CurvatureKey(prefix, word, COMM), fn.scale(half * sign))
        else:
            raise ValueError(f"Words of {len(operand)} atoms have no bracket basis")
    return out


def to_nabla(expr: CurvatureExpression) -> CurvatureExpression:
    """Re-parameterize every function by Delta_i = exp(s_i)"""
    return expr.map_functions(lambda fn: fn.with_coordinates(NABLA_COORDINATES))


def reported_value(
    fn: SpectralFunction,
    point: Sequence[float],
    pi_half: int,
    f_eval: Optional[FEvaluator] = None,
) -> float:
    """Value of a coefficient function in units of pi^(pi_half / 2)"""
    return fn.evaluate(point, f_eval) / math.pi ** (pi_half / 2)


def eval_curvature(
    expr: CurvatureExpression,
    key: Union[CurvatureKey, Tuple],
    point: Sequence[float],
    f_eval: Optional[FEvaluator] = None,
) -> float:
    """
    Evaluate the coefficient function of one basis word.

    Every word of the zero expression evaluates to 0.

    Raises:
        ValueError: If the word is not a basis word of a non-zero expression
    """
    fn = expr.get(CurvatureKey(*key))
    if fn is None:
        if expr.is_zero:
            return 0.0
        raise ValueError(
            f"Unknown basis word '{format_key(CurvatureKey(*key))}'. "
            f"Valid options: {', '.join(format_key(k) for k in expr.keys())}"
        )
    return reported_value(fn, point, expr.pi_half, f_eval)
