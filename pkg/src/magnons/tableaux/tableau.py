"""Standard Young and semistandard (Weyl) tableaux.

Tableaux are stored row-major as tuples of rows. The shape is kept alongside
the rows and checked against them on construction, so a tableau that exists
is always valid.
"""

import json
from dataclasses import dataclass
from typing import Any, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from magnons.errors import TableauValidationError
from magnons.tableaux.partitions import Partition

Rows = Tuple[Tuple[Any, ...], ...]


def _freeze(rows: Iterable[Iterable[Any]]) -> Rows:
    return tuple(tuple(row) for row in rows)


def _check_shape(shape: Partition, rows: Rows) -> None:
    if tuple(len(row) for row in rows) != shape.parts:
        raise TableauValidationError(
            f"Rows {[list(r) for r in rows]} do not have shape {shape}"
        )


def _check_columns_strict(rows: Rows) -> None:
    for upper, lower in zip(rows, rows[1:]):
        for col, entry in enumerate(lower):
            if not upper[col] < entry:
                raise TableauValidationError(
                    f"Column {col + 1} is not strictly increasing: {upper[col]!r} above {entry!r}"
                )


def _render_rows(rows: Rows) -> List[str]:
    wide = any(len(str(e)) > 1 for row in rows for e in row)
    sep = " " if wide else ""
    return [sep.join(str(e) for e in row) for row in rows]


class _TableauMixin:
    shape: Partition
    rows: Rows

    @property
    def n(self) -> int:
        return self.shape.n

    def render(self) -> str:
        """Multi-line rendering, second row printed under the first."""
        if not self.rows:
            return "∅"
        return "\n".join(_render_rows(self.rows))

    def inline(self) -> str:
        """Single-line rendering such as ``(1235/4)``."""
        if not self.rows:
            return "∅"
        return "(" + "/".join(_render_rows(self.rows)) + ")"

    def to_dict(self) -> Dict[str, Any]:
        return {"shape": self.shape.to_list(), "rows": [list(row) for row in self.rows]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def __str__(self) -> str:
        return self.inline()


@dataclass(frozen=True)
class StandardYoungTableau(_TableauMixin):
    """Filling of a shape with 1..n, rows and columns strictly increasing."""

    shape: Partition
    rows: Rows

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", _freeze(self.rows))
        _check_shape(self.shape, self.rows)
        entries = sorted(e for row in self.rows for e in row)
        if entries != list(range(1, self.shape.n + 1)):
            raise TableauValidationError(
                f"Entries must be exactly 1..{self.shape.n}, got {entries}"
            )
        for row in self.rows:
            if any(a >= b for a, b in zip(row, row[1:])):
                raise TableauValidationError(f"Row {list(row)} is not strictly increasing")
        _check_columns_strict(self.rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "StandardYoungTableau":
        frozen = _freeze(r for r in rows if len(r))
        return cls(Partition(len(r) for r in frozen), frozen)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "StandardYoungTableau":
        return cls(Partition(data["shape"]), _freeze(data["rows"]))

    @property
    def second_row_entry(self) -> Optional[int]:
        """Entry of a one-box second row, ``None`` for a single-row tableau."""
        if len(self.rows) < 2:
            return None
        if len(self.rows) > 2 or len(self.rows[1]) != 1:
            raise TableauValidationError(f"{self.inline()} is not a hook of shape (N-1,1)")
        return self.rows[1][0]


@dataclass(frozen=True)
class WeylTableau(_TableauMixin):
    """Semistandard filling over a totally ordered alphabet.

    Rows weakly increase, columns strictly increase. Over the two-letter
    spin alphabet {0, 1} column strictness leaves room for at most two rows.
    """

    shape: Partition
    rows: Rows

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", _freeze(self.rows))
        _check_shape(self.shape, self.rows)
        for row in self.rows:
            if any(a > b for a, b in zip(row, row[1:])):
                raise TableauValidationError(f"Row {list(row)} is not weakly increasing")
        _check_columns_strict(self.rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Hashable]]) -> "WeylTableau":
        frozen = _freeze(r for r in rows if len(r))
        return cls(Partition(len(r) for r in frozen), frozen)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "WeylTableau":
        return cls(Partition(data["shape"]), _freeze(data["rows"]))

    def content(self) -> Dict[Any, int]:
        counts: Dict[Any, int] = {}
        for row in self.rows:
            for letter in row:
                counts[letter] = counts.get(letter, 0) + 1
        return counts
