"""
Registry of closed-form reference functions

Every function is stored with its arity, its printed location and the linear
forms (in log coordinates) on which its closed form has a removable
singularity. Close to such a locus the value is obtained by symmetric
Lagrange extrapolation from nodes that stay clear of every singular form.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)

NABLA = "nabla"
DELTA = "delta"

SINGULAR_THRESHOLD = 1e-2
NODE_CLEARANCE = 0.015
_STEPS = (0.05, 0.043, 0.031, 0.023)
_DIRECTIONS = {
    1: ((1.0,),),
    2: ((1.0, 0.618), (0.618, 1.0), (1.0, -0.382)),
}
_OFFSETS = (-4, -3, -2, -1, 1, 2, 3, 4)

LinearForm = Tuple[int, ...]


@lru_cache(maxsize=None)
def _lagrange_weights() -> np.ndarray:
    """Weights of the interpolating polynomial through _OFFSETS, evaluated at 0"""
    nodes = np.array(_OFFSETS, dtype=float)
    weights = np.ones(len(nodes))
    for i, x in enumerate(nodes):
        for j, y in enumerate(nodes):
            if i != j:
                weights[i] *= (0.0 - y) / (x - y)
    return weights


@dataclass(frozen=True)
class ReferenceFunction:
    """A named closed form with its arity and printed location"""

    name: str
    arity: int
    evaluator: Callable[..., float]
    location: str
    singular: Tuple[LinearForm, ...] = ()
    coordinates: str = NABLA
    aliases: Tuple[str, ...] = field(default=())

    def _raw(self, x: Sequence[float]) -> float:
        if self.coordinates == DELTA:
            return float(self.evaluator(*(math.exp(v) for v in x)))
        return float(self.evaluator(*x))

    def singular_distance(self, x: Sequence[float]) -> float:
        """Smallest |form . x| over the singular forms, x in log coordinates"""
        if not self.singular:
            return math.inf
        return min(abs(sum(c * v for c, v in zip(form, x))) for form in self.singular)

    def _nodes(self, x: Sequence[float]) -> List[Tuple[float, ...]]:
        best: Optional[List[Tuple[float, ...]]] = None
        best_clearance = -1.0
        for h in _STEPS:
            for direction in _DIRECTIONS[self.arity]:
                nodes = [
                    tuple(v + k * h * d for v, d in zip(x, direction)) for k in _OFFSETS
                ]
                clearance = min(self.singular_distance(node) for node in nodes)
                if clearance >= NODE_CLEARANCE:
                    return nodes
                if clearance > best_clearance:
                    best, best_clearance = nodes, clearance
        logger.debug(f"No clean node set for {self.name} at {tuple(x)}, clearance {best_clearance}")
        assert best is not None
        return best

    def __call__(self, *point: float) -> float:
        """
        Evaluate at a point given in this function's own coordinates.

        Raises:
            ValueError: If the number of arguments differs from the arity
        """
        if len(point) != self.arity:
            raise ValueError(
                f"Reference function '{self.name}' takes {self.arity} arguments, got {len(point)}"
            )
        if self.coordinates == DELTA:
            if any(p <= 0 for p in point):
                raise ValueError(f"Reference function '{self.name}' needs positive arguments")
            x = [math.log(p) for p in point]
        else:
            x = [float(p) for p in point]
        if self.singular_distance(x) >= SINGULAR_THRESHOLD:
            return self._raw(x)
        values = np.array([self._raw(node) for node in self._nodes(x)])
        return float(np.dot(_lagrange_weights(), values))


class ReferenceFactory:
    """Factory for looking up reference functions by name"""

    def __init__(self) -> None:
        self._functions: Dict[str, ReferenceFunction] = {}
        self._aliases: Dict[str, str] = {}

    def register(self, function: ReferenceFunction) -> None:
        self._functions[function.name] = function
        for alias in function.aliases:
            self._aliases[alias] = function.name

    def get_function(self, name: str) -> ReferenceFunction:
        """
        Get a reference function by name or alias.

        Raises:
            ValueError: If the name is not registered
        """
        name = name.strip()
        name = self._aliases.get(name, name)
        if name not in self._functions:
            raise ValueError(
                f"Unknown reference function '{name}'. "
                f"Valid options: {', '.join(self.get_function_names())}"
            )
        return self._functions[name]

    def get_function_names(self) -> list[str]:
        return sorted(self._functions.keys())


# Global factory instance
_factory = ReferenceFactory()


def register_reference(
    name: str,
    arity: int,
    evaluator: Callable[..., float],
    location: str,
    singular: Sequence[LinearForm] = (),
    coordinates: str = NABLA,
    aliases: Sequence[str] = (),
) -> ReferenceFunction:
    """Register a closed form with the global factory"""
    function = ReferenceFunction(
        name=name,
        arity=arity,
        evaluator=evaluator,
        location=location,
        singular=tuple(singular),
        coordinates=coordinates,
        aliases=tuple(aliases),
    )
    _factory.register(function)
    return function


def get_reference(name: str) -> ReferenceFunction:
    return _factory.get_function(name)


def eval_reference(name: str, point: Sequence[float]) -> float:
    """Evaluate a registered reference function at a point"""
    return get_reference(name)(*point)


def get_reference_names() -> list[str]:
    return _factory.get_function_names()
