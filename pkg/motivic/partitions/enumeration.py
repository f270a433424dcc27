"""
Integer partitions in multiplicity form.

A partition alpha = (1^a1 2^a2 ... s^as) is stored as the vector
(a1, ..., as): weight n = sum i*ai, norm ||alpha|| = sum ai and the
automorphism group prod S_ai has order prod ai!.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import factorial, prod
from typing import Iterator

from pydantic import BaseModel, ConfigDict
from sympy.utilities.iterables import partitions

from core.polynomials import ONE, BiPoly


class PartitionSchema(BaseModel):
    model_config = ConfigDict(frozen=True)

    mult: list[int]


@dataclass(frozen=True)
class Partition:
    mult: tuple[int, ...] = ()

    def __post_init__(self):
        if any(a < 0 for a in self.mult):
            raise ValueError(f"Multiplicities must be >= 0, got {self.mult}.")
        if self.mult and self.mult[-1] == 0:
            raise ValueError(f"Trailing multiplicity must be non-zero, got {self.mult}.")

    @classmethod
    def from_parts(cls, parts) -> Partition:
        parts = list(parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"Parts must be positive, got {parts}.")
        mult = [0] * max(parts, default=0)
        for p in parts:
            mult[p - 1] += 1
        return cls(tuple(mult))

    @classmethod
    def from_dict(cls, multiplicities: dict[int, int]) -> Partition:
        size = max((p for p, a in multiplicities.items() if a), default=0)
        return cls(tuple(multiplicities.get(i, 0) for i in range(1, size + 1)))

    @cached_property
    def weight(self) -> int:
        return sum(i * a for i, a in enumerate(self.mult, start=1))

    @cached_property
    def norm(self) -> int:
        return sum(self.mult)

    @property
    def parts(self) -> list[int]:
        """Parts in decreasing order."""
        return [i for i in range(len(self.mult), 0, -1) for _ in range(self.mult[i - 1])]

    def aut_order(self) -> int:
        return prod(factorial(a) for a in self.mult)

    def to_schema(self) -> PartitionSchema:
        return PartitionSchema(mult=list(self.mult))

    def __str__(self):
        pieces = []
        for i in range(len(self.mult), 0, -1):
            a = self.mult[i - 1]
            if a == 1:
                pieces.append(str(i))
            elif a > 1:
                pieces.append(f"{i}^{a}")
        return "(" + ",".join(pieces) + ")"


def _order_key(partition: Partition, n: int) -> tuple[int, ...]:
    padded = partition.mult + (0,) * (n - len(partition.mult))
    return tuple(reversed(padded))


def partitions_of(n: int) -> list[Partition]:
    """
    Every partition of n once, reverse-lexicographic on multiplicity vectors
    read from the largest part down: (4), (3,1), (2^2), (2,1^2), (1^4).
    """
    if n < 0:
        raise ValueError(f"Can not partition a negative number, got {n}.")
    if n == 0:
        return [Partition()]
    # sympy reuses the yielded dict
    found = [Partition.from_dict(dict(p)) for p in partitions(n)]
    return sorted(found, key=lambda p: _order_key(p, n), reverse=True)


def compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of n into `parts` non-negative summands, as ordered tuples."""
    if parts < 1:
        raise ValueError(f"Need at least one part, got {parts}.")
    # stars and bars
    for bars in combinations(range(n + parts - 1), parts - 1):
        edges = (-1, *bars, n + parts - 1)
        yield tuple(edges[i + 1] - edges[i] - 1 for i in range(parts))


def falling_factorial(m, k: int) -> BiPoly:
    """m (m - 1) ... (m - k + 1); the empty product is 1."""
    if k < 0:
        raise ValueError(f"Falling factorial length must be >= 0, got {k}.")
    m = BiPoly.coerce(m)
    result = ONE
    for i in range(k):
        result = result * (m - i)
    return result
