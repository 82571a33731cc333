"""Integer partitions used as tableau shapes."""

from dataclasses import dataclass
from itertools import accumulate, zip_longest
from typing import Iterable, List, Tuple

from magnons.errors import InvalidInputError


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive parts.

    The empty partition (no parts, ``n == 0``) is the shape of the empty
    tableau and is allowed.
    """

    parts: Tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        object.__setattr__(self, "parts", tuple(int(p) for p in parts))
        if any(p < 1 for p in self.parts):
            raise InvalidInputError(f"Partition parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise InvalidInputError(f"Partition parts must weakly decrease: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def num_rows(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(sum(1 for p in self.parts if p > c) for c in range(self.parts[0]))

    def dominates(self, other: "Partition") -> bool:
        """Return True if ``self`` is at or above ``other`` in dominance order."""
        if self.n != other.n:
            raise InvalidInputError(
                f"Dominance compares partitions of one size, got {self.n} and {other.n}"
            )
        mine = accumulate(self.parts)
        theirs = accumulate(other.parts)
        return all(a >= b for a, b in zip_longest(mine, theirs, fillvalue=self.n))

    def to_list(self) -> List[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def two_row_partition(n: int, second: int) -> Partition:
    """Build the shape ``(n - second, second)``, dropping an empty second row."""
    if second < 0 or second > n - second:
        raise InvalidInputError(f"({n - second},{second}) is not a partition")
    return Partition((n - second, second) if second else ((n,) if n else ()))


def two_row_partitions(n: int) -> List[Partition]:
    """All partitions of ``n`` with at most two rows, in dominance-decreasing order."""
    return [two_row_partition(n, k) for k in range(n // 2 + 1)]
