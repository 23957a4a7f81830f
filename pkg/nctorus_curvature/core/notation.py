"""
Printed notation for symbol terms

Terms are written the way they are displayed in hand computations, e.g.

    -4 x1^5 x3 k^2 b0^2 d1(k^2) b0^2 d3(k^2) b0
    2 u^3 k^2 b0^2 d1(k) k^3 b0^2 k d1(k) b0

x<j> is xi_j, d<alpha>(k^r) is delta^alpha applied to k^r (expanded through the
Leibniz rule), d11(k) and d1(d1(k)) both denote delta_1^2(k), and u^n is the
radial power of a reduced integral, in which case b0 stands for b0(u).
"""

import re
from fractions import Fraction
from typing import Iterable, List, Optional, Tuple

from .coefficients import Coefficient
from .symbols import SymbolExpr, Term, delta_multi, sum_exprs
from .words import B0, B0U, DK, DLOGK, KPOW, UNIT, Atom, Word, b0, b0u, dk

_COEFF = re.compile(r"^[+-]?\d+(/\d+)?$")
_XI = re.compile(r"^x(\d)(?:\^(\d+))?$")
_U = re.compile(r"^u(?:\^(-?\d+(?:/\d+)?))?$")
_K = re.compile(r"^k(?:\^(-?\d+))?$")
_B0 = re.compile(r"^b0(?:\^(\d+))?$")
_DELTA = re.compile(r"^d(\d+)\(k(?:\^(-?\d+))?\)$")
_NESTED = re.compile(r"^d(\d)\(d(\d)\(k\)\)$")

_SUPERSCRIPTS = str.maketrans("0123456789-/", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻ᐟ")
_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def _parse(text: str, dimension: int, radial: bool) -> Tuple[Fraction, SymbolExpr]:
    tokens = text.replace("*", " ").split()
    if not tokens:
        raise ValueError("Cannot parse an empty term")
    coeff = Fraction(1)
    if tokens[0] in ("-", "+"):
        coeff = Fraction(-1 if tokens[0] == "-" else 1)
        tokens = tokens[1:]
    elif _COEFF.match(tokens[0]):
        coeff = Fraction(tokens[0])
        tokens = tokens[1:]

    u_power = Fraction(0)
    xi = [0] * dimension
    expr = SymbolExpr.constant(dimension, coeff)
    for token in tokens:
        if m := _XI.match(token):
            j = int(m.group(1))
            if not 1 <= j <= dimension:
                raise ValueError(f"Invalid direction in '{token}' for dimension {dimension}")
            xi[j - 1] += int(m.group(2) or 1)
        elif radial and (m := _U.match(token)):
            u_power += Fraction(m.group(1) or 1)
        elif m := _K.match(token):
            expr = expr * SymbolExpr.k(dimension, int(m.group(1) or 1))
        elif m := _B0.match(token):
            power = int(m.group(1) or 1)
            atom = b0u(power) if radial else b0(power)
            expr = expr * SymbolExpr.word(dimension, [atom])
        elif m := _NESTED.match(token):
            expr = expr * SymbolExpr.word(dimension, [dk(int(m.group(1)), int(m.group(2)))])
        elif m := _DELTA.match(token):
            alpha = [int(c) for c in m.group(1)]
            power = int(m.group(2) or 1)
            if power == 1:
                piece = SymbolExpr.word(dimension, [dk(*alpha)])
            else:
                piece = delta_multi(alpha, SymbolExpr.k(dimension, power))
            expr = expr * piece
        else:
            raise ValueError(f"Cannot parse token '{token}' in term '{text}'")
    return u_power, expr * SymbolExpr.word(dimension, [], xi=tuple(xi))


def parse_symbol(text: str, dimension: int = 3) -> SymbolExpr:
    """Parse one printed symbol-stage term into a SymbolExpr"""
    return _parse(text, dimension, radial=False)[1]


def parse_symbols(texts: Iterable[str], dimension: int = 3) -> SymbolExpr:
    """Sum of several printed terms"""
    return sum_exprs(dimension, (parse_symbol(t, dimension) for t in texts))


def parse_radial(text: str, dimension: int = 3) -> Tuple[Fraction, SymbolExpr]:
    """Parse one printed radial term into (u power, expression over b0(u))"""
    return _parse(text, dimension, radial=True)


# printing ---------------------------------------------------------------


def _sup(value: object, unicode: bool) -> str:
    if unicode:
        return str(value).translate(_SUPERSCRIPTS)
    return f"^{value}"


def _sub(value: object, unicode: bool) -> str:
    return str(value).translate(_SUBSCRIPTS) if unicode else str(value)


def format_atom(atom: Atom, unicode: bool = True) -> str:
    if atom.kind == KPOW:
        return "k" if atom.value == 1 else "k" + _sup(atom.value, unicode)
    if atom.kind in (B0, B0U):
        base = "b₀" if unicode else "b0"
        return base if atom.value == 1 else base + _sup(atom.value, unicode)
    alpha = "".join(str(j) for j in atom.value)  # type: ignore[union-attr]
    if unicode:
        derivative = "".join("δ" + _sub(j, True) for j in atom.value)  # type: ignore[union-attr]
    else:
        derivative = "d" + alpha
    if atom.kind == DK:
        return f"{derivative}(k)"
    if atom.kind == UNIT:
        return ("k⁻¹" if unicode else "k^-1 ") + f"{derivative}(k)"
    if atom.kind == DLOGK:
        return f"{derivative}(log k)"
    raise ValueError(f"Unknown atom kind '{atom.kind}'")


def format_word(word: Word, unicode: bool = True) -> str:
    return " ".join(format_atom(a, unicode) for a in word) or "1"


def format_term(
    coeff: Coefficient,
    xi: Tuple[int, ...] = (),
    word: Word = (),
    u_power: Optional[Fraction] = None,
    unicode: bool = True,
) -> str:
    parts: List[str] = [str(coeff.rat)]
    if coeff.pi_half:
        parts.append(("π" if unicode else "pi") + _sup(Fraction(coeff.pi_half, 2), unicode))
    if u_power:
        parts.append("u" if u_power == 1 else "u" + _sup(u_power, unicode))
    for j, e in enumerate(xi, start=1):
        if e:
            name = ("ξ" + _sub(j, unicode)) if unicode else f"x{j}"
            parts.append(name if e == 1 else name + _sup(e, unicode))
    if word:
        parts.append(format_word(word, unicode))
    return " ".join(parts)


def format_expr(expr: SymbolExpr, unicode: bool = True) -> str:
    if expr.is_zero:
        return "0"
    return "\n".join(format_term(t.coeff, t.xi, t.word, unicode=unicode) for t in expr.terms())


def term_line(term: Term, unicode: bool = False) -> str:
    return format_term(term.coeff, term.xi, term.word, unicode=unicode)
