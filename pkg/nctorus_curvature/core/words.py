"""
Atoms and words of the noncommutative symbol algebra

A word is a tuple of atoms. Powers of k and of the resolvent factor b0 are
functions of k and commute with each other, so inside every maximal run free
of derivative atoms they are merged and written k^r b0^m.
"""

from typing import Iterable, List, NamedTuple, Tuple, Union

AtomValue = Union[int, Tuple[int, ...]]

KPOW = "k"
DK = "dk"
B0 = "b0"
B0U = "b0u"
UNIT = "unit"
DLOGK = "dlogk"

_RUN_KINDS = (KPOW, B0, B0U)
_SEPARATOR_KINDS = (DK, UNIT, DLOGK)


class Atom(NamedTuple):
    """One letter of a word: a power of k or b0, or a derivative of k or log k"""

    kind: str
    value: AtomValue

    @property
    def order(self) -> int:
        """Derivative order of a separator atom, 0 for run atoms"""
        if self.kind in _SEPARATOR_KINDS:
            return len(self.value)  # type: ignore[arg-type]
        return 0


Word = Tuple[Atom, ...]


def kpow(r: int) -> Atom:
    return Atom(KPOW, r)


def dk(*alpha: int) -> Atom:
    return Atom(DK, tuple(sorted(alpha)))


def b0(m: int = 1) -> Atom:
    return Atom(B0, m)


def b0u(m: int = 1) -> Atom:
    return Atom(B0U, m)


def unit(*alpha: int) -> Atom:
    """The unit k^-1 delta^alpha(k) of the spectral stage"""
    return Atom(UNIT, tuple(sorted(alpha)))


def dlogk(*alpha: int) -> Atom:
    return Atom(DLOGK, tuple(sorted(alpha)))


def _flush(out: List[Atom], r: int, m: int, mu: int) -> None:
    if m and mu:
        raise ValueError("b0 and b0(u) cannot appear in the same word")
    if r:
        out.append(kpow(r))
    if m:
        out.append(b0(m))
    if mu:
        out.append(b0u(mu))


def canonical(atoms: Iterable[Atom]) -> Word:
    """Merge every derivative-free run into k^r b0^m form"""
    out: List[Atom] = []
    r = m = mu = 0
    has_dk = has_dlogk = False
    for atom in atoms:
        kind = atom.kind
        if kind == KPOW:
            r += atom.value  # type: ignore[operator]
        elif kind == B0:
            m += atom.value  # type: ignore[operator]
        elif kind == B0U:
            mu += atom.value  # type: ignore[operator]
        else:
            _flush(out, r, m, mu)
            r = m = mu = 0
            has_dk = has_dk or kind == DK
            has_dlogk = has_dlogk or kind == DLOGK
            out.append(atom)
    _flush(out, r, m, mu)
    if has_dk and has_dlogk:
        raise ValueError("delta(k) and delta(log k) atoms cannot appear in the same word")
    return tuple(out)


def join(left: Word, right: Word) -> Word:
    """Product of two canonical words"""
    if not left:
        return right
    if not right:
        return left
    if left[-1].kind in _SEPARATOR_KINDS or right[0].kind in _SEPARATOR_KINDS:
        return left + right
    # only the trailing run of left and the leading run of right can merge
    i = len(left)
    while i > 0 and left[i - 1].kind in _RUN_KINDS:
        i -= 1
    j = 0
    while j < len(right) and right[j].kind in _RUN_KINDS:
        j += 1
    return left[:i] + canonical(left[i:] + right[:j]) + right[j:]


def split_runs(word: Word) -> Tuple[List[Tuple[int, int]], List[Atom]]:
    """
    Split a word into its runs and separators.

    Returns the list of (k power, b0 power) pairs, one per run, and the list of
    separator atoms between them; there is always one more run than separators.
    """
    runs: List[Tuple[int, int]] = []
    separators: List[Atom] = []
    r = m = 0
    for atom in word:
        if atom.kind == KPOW:
            r += atom.value  # type: ignore[operator]
        elif atom.kind in (B0, B0U):
            m += atom.value  # type: ignore[operator]
        else:
            runs.append((r, m))
            separators.append(atom)
            r = m = 0
    runs.append((r, m))
    return runs, separators


def b0_degree(word: Word) -> int:
    """Total power of b0 (or b0(u)) in a word"""
    return sum(a.value for a in word if a.kind in (B0, B0U))  # type: ignore[misc]


def separators(word: Word) -> Tuple[Atom, ...]:
    return tuple(a for a in word if a.kind in _SEPARATOR_KINDS)
