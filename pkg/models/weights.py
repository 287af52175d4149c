"""
Vertex weight vector with exact rational entries.
"""

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Iterable, Iterator, Tuple, Union

from utils.error_handler import GraphValidationError

WeightLike = Union[int, str, Fraction, Decimal, float]


def to_fraction(value: WeightLike) -> Fraction:
    """Convert an int, decimal string, 'p/q' string, Decimal or Fraction exactly.

    Floats go through their shortest repr, so 0.1 becomes 1/10 rather than
    the nearest binary fraction.
    """
    if isinstance(value, bool):
        raise GraphValidationError(f"Boolean is not a weight: {value!r}")
    if isinstance(value, float):
        value = repr(value)
    try:
        result = Fraction(value.strip() if isinstance(value, str) else value)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise GraphValidationError(f"Not an exact weight: {value!r}", original_exception=e)
    return result


@dataclass(frozen=True)
class WeightVector:
    """Non-negative rational weight per vertex; entry i is w(v_i)."""

    weights: Tuple[Fraction, ...]

    def __post_init__(self):
        converted = tuple(to_fraction(x) for x in self.weights)
        for index, weight in enumerate(converted):
            if weight < 0:
                raise GraphValidationError(
                    f"Weight of vertex {index + 1} is negative: {weight}",
                    details={"vertex": index + 1},
                )
        object.__setattr__(self, 'weights', converted)

    @classmethod
    def of(cls, values: Iterable[WeightLike]) -> "WeightVector":
        return cls(tuple(values))

    @classmethod
    def uniform(cls, n: int, value: WeightLike = 1) -> "WeightVector":
        return cls(tuple([value] * n))

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, index: int) -> Fraction:
        return self.weights[index]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.weights)

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def descending_order(self) -> Tuple[int, ...]:
        """Vertex indices by weight descending, index ascending on ties"""
        return tuple(sorted(range(self.n), key=lambda v: (-self.weights[v], v)))

    def block_weight(self, block: Iterable[int]) -> Fraction:
        return sum((self.weights[v] for v in block), Fraction(0))

    def scaled(self, factor: WeightLike) -> "WeightVector":
        factor = to_fraction(factor)
        return WeightVector(tuple(w * factor for w in self.weights))

    def extended(self, value: WeightLike) -> "WeightVector":
        return WeightVector(self.weights + (to_fraction(value),))
