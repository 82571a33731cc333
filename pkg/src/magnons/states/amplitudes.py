"""Exact one-magnon amplitudes <j|lambda y>.

Each amplitude is a signed square root of a rational, kept as (sign, p, q)
with value sign * sqrt(p/q). The exact form drives radical rendering and
bit-stable JSON; the float is derived from it.
"""

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict

import sympy

from magnons.errors import InvalidInputError, InvalidLabelError
from magnons.tableaux import Partition, StandardYoungTableau

_SQRT = re.compile(r"sqrt\((\d+)\)")


@dataclass(frozen=True)
class ExactAmplitude:
    """Value ``sign * sqrt(p / q)`` with ``p/q`` in lowest terms."""

    sign: int
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.sign not in (-1, 0, 1) or self.p < 0 or self.q < 1:
            raise InvalidInputError(f"Malformed exact amplitude {self}")
        if (self.sign == 0) != (self.p == 0):
            raise InvalidInputError(f"Zero amplitude must have sign 0 and p 0: {self}")
        ratio = Fraction(self.p, self.q)
        object.__setattr__(self, "p", ratio.numerator)
        object.__setattr__(self, "q", ratio.denominator)

    @classmethod
    def zero(cls) -> "ExactAmplitude":
        return cls(0, 0, 1)

    @property
    def squared(self) -> Fraction:
        return Fraction(self.p, self.q)

    @property
    def value(self) -> float:
        return self.sign * math.sqrt(self.p / self.q)

    def to_sympy(self) -> sympy.Expr:
        return self.sign * sympy.sqrt(sympy.Rational(self.p, self.q))

    def magnitude_text(self) -> str:
        """Rationalized radical for |value|, e.g. ``√3/2`` or ``2√5/5``."""
        text = str(sympy.sqrt(sympy.Rational(self.p, self.q)))
        return _SQRT.sub(r"√\1", text).replace("*", "")

    def render(self) -> str:
        text = self.magnitude_text()
        return f"−{text}" if self.sign < 0 else text

    def to_dict(self) -> Dict[str, Any]:
        return {"sign": self.sign, "p": self.p, "q": self.q, "float": self.value}


def validate_label(n: int, label: StandardYoungTableau) -> None:
    """Check that ``label`` is one of the N one-magnon Schur-Weyl labels.

    Raises:
        InvalidLabelError: If the shape is neither (N) nor (N-1,1).
    """
    if n < 2:
        raise InvalidLabelError(f"One-magnon labels need N >= 2, got {n}")
    if label.shape not in (Partition((n,)), Partition((n - 1, 1))):
        raise InvalidLabelError(f"{label.inline()} is not a one-magnon label for N={n}")


def exact_amplitude(n: int, label: StandardYoungTableau, j: int) -> ExactAmplitude:
    """Exact ``<j|lambda y>`` for node ``j`` (1-based)."""
    validate_label(n, label)
    if not 1 <= j <= n:
        raise InvalidInputError(f"Node {j} outside 1..{n}")
    special = label.second_row_entry
    if special is None:
        return ExactAmplitude(1, 1, n)
    if j < special:
        return ExactAmplitude(-1, 1, (special - 1) * special)
    if j == special:
        return ExactAmplitude(1, special - 1, special)
    return ExactAmplitude.zero()


def amplitude(n: int, label: StandardYoungTableau, j: int) -> float:
    """Float value of ``<j|lambda y>``.

    Raises:
        InvalidLabelError: If ``label`` is not a one-magnon label for ``n``.
    """
    return exact_amplitude(n, label, j).value
