"""
Expected curvature densities as ordered-word tables

Each density is a grid of entries; an entry maps (k prefix, operand word over
delta(log k) atoms) to a linear combination of named reference functions.
Values are in units of pi^(density_pi_half / 2) of the metric.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ..core.words import Word, dlogk
from .functions import eval_reference

SCALAR = "scalar"
ONE_FORM_DENSITY = "one_form_density"
RICCI = "ricci"

Part = Tuple[Fraction, str]
WordKey = Tuple[int, Word]


@dataclass(frozen=True)
class ExpectedWord:
    """sum of weight * reference function"""

    parts: Tuple[Part, ...]

    def evaluate(self, point: Sequence[float]) -> float:
        return sum(float(w) * eval_reference(name, point) for w, name in self.parts)


Entry = Dict[WordKey, ExpectedWord]
Grid = List[List[Entry]]


class _EntryBuilder:
    def __init__(self) -> None:
        self._parts: Dict[WordKey, List[Part]] = {}

    def add(self, prefix: int, word: Word, weight: Fraction | int, name: str) -> "_EntryBuilder":
        self._parts.setdefault((prefix, word), []).append((Fraction(weight), name))
        return self

    def build(self) -> Entry:
        return {key: ExpectedWord(tuple(parts)) for key, parts in self._parts.items()}


def second(*alpha: int) -> Word:
    """The word delta^alpha(log k)"""
    return (dlogk(*alpha),)


def pair(i: int, j: int) -> Word:
    """The word delta_i(log k) delta_j(log k)"""
    return (dlogk(i), dlogk(j))


# conformal 3-torus ------------------------------------------------------


def _conformal3_scalar() -> Entry:
    entry = _EntryBuilder()
    for j in (1, 2, 3):
        entry.add(-2, second(j, j), 1, "K").add(-2, pair(j, j), 1, "H")
    return entry.build()


def _conformal3_one_form(sign: int = 1, ricci: bool = False) -> Grid:
    grid: Grid = []
    for i in (1, 2, 3):
        row = []
        for j in (1, 2, 3):
            entry = _EntryBuilder()
            if i == j:
                for l in (1, 2, 3):
                    if ricci:
                        entry.add(-2, second(l, l), Fraction(3, 2), "K")
                        entry.add(-2, pair(l, l), 1, "H").add(-2, pair(l, l), -1, "T")
                    else:
                        entry.add(-2, second(l, l), Fraction(-1, 2), "K")
                        entry.add(-2, pair(l, l), 1, "T")
                entry.add(-2, second(i, i), sign, "F")
                entry.add(-2, pair(i, i), sign, "W")
            else:
                entry.add(-2, second(i, j), sign, "F")
                entry.add(-2, pair(i, j), sign, "W").add(-2, pair(i, j), -sign, "S")
                entry.add(-2, pair(j, i), sign, "S")
            row.append(entry.build())
        grid.append(row)
    return grid


# non-conformal 3-torus --------------------------------------------------


def _nonconformal3_scalar(scale: int = 1, vertical: bool = True) -> Entry:
    entry = _EntryBuilder()
    for j in (1, 2):
        entry.add(0, second(j, j), scale, "K1").add(0, pair(j, j), scale, "H1")
    if vertical:
        entry.add(-2, second(3, 3), scale, "K2").add(-2, pair(3, 3), scale, "H2")
    return entry.build()


def _prefix(i: int, j: int) -> int:
    return -[i, j].count(3)


def _nonconformal3_off_diagonal(i: int, j: int, sign: int) -> Entry:
    entry = _EntryBuilder()
    prefix = _prefix(i, j)
    # K and W vanish on the horizontal pair
    if {i, j} != {1, 2}:
        entry.add(prefix, second(i, j), sign, f"K_{i}{j}")
        entry.add(prefix, pair(i, j), sign, f"W_{i}{j}")
        entry.add(prefix, pair(j, i), sign, f"W_{i}{j}")
    entry.add(prefix, pair(i, j), sign, f"S_{i}{j}")
    entry.add(prefix, pair(j, i), -sign, f"S_{i}{j}")
    return entry.build()


def _nonconformal3_one_form() -> Grid:
    grid: Grid = []
    for i in (1, 2, 3):
        row = []
        for j in (1, 2, 3):
            if i != j:
                row.append(_nonconformal3_off_diagonal(i, j, 1))
                continue
            entry = _EntryBuilder()
            if i == 3:
                for l in (1, 2):
                    entry.add(0, second(l, l), 1, "K1").add(0, pair(l, l), 1, "H1")
                entry.add(-2, second(3, 3), 1, "K_33")
                entry.add(-2, pair(3, 3), 1, "H4").add(-2, pair(3, 3), 2, "W_33")
            else:
                for l in (1, 2):
                    entry.add(0, second(l, l), 1, f"K_{l}{l}")
                    entry.add(0, pair(l, l), 2, f"W_{l}{l}")
                entry.add(-2, second(3, 3), 1, "K3").add(-2, pair(3, 3), 1, "H3")
            row.append(entry.build())
        grid.append(row)
    return grid


def _nonconformal3_ricci() -> Grid:
    grid: Grid = []
    for i in (1, 2, 3):
        row = []
        for j in (1, 2, 3):
            if i != j:
                row.append(_nonconformal3_off_diagonal(i, j, -1))
                continue
            entry = _EntryBuilder()
            if i == 3:
                entry.add(-2, second(3, 3), -1, "Kt_33")
                entry.add(-2, pair(3, 3), -1, "Ht4").add(-2, pair(3, 3), -2, "W_33")
            else:
                for l in (1, 2):
                    entry.add(0, second(l, l), -1, f"Kt_{l}{l}")
                    entry.add(0, pair(l, l), -2, f"Wt_{l}{l}")
                entry.add(-2, second(3, 3), -1, "Kt3").add(-2, pair(3, 3), -1, "Ht3")
            row.append(entry.build())
        grid.append(row)
    return grid


def expected_density(metric_name: str, obj: str) -> Grid:
    """
    Expected ordered-word table of a curvature object.

    Raises:
        ValueError: If no printed result exists for this metric and object
    """
    if obj == SCALAR:
        if metric_name == "conformal3":
            return [[_conformal3_scalar()]]
        if metric_name == "nonconformal3":
            return [[_nonconformal3_scalar()]]
        if metric_name == "conformal2":
            return [[_nonconformal3_scalar(scale=2, vertical=False)]]
    elif obj == ONE_FORM_DENSITY:
        if metric_name == "conformal3":
            return _conformal3_one_form()
        if metric_name == "nonconformal3":
            return _nonconformal3_one_form()
    elif obj == RICCI:
        if metric_name == "conformal3":
            return _conformal3_one_form(sign=-1, ricci=True)
        if metric_name == "nonconformal3":
            return _nonconformal3_ricci()
    raise ValueError(f"No reference result for object '{obj}' of metric '{metric_name}'")
