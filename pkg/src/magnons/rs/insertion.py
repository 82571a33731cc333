"""Robinson-Schensted row insertion over a totally ordered alphabet.

A letter entering a row replaces the leftmost entry strictly greater than
itself; the displaced entry moves on to the next row. When nothing in the row
is greater, the letter is appended. Equal letters therefore queue up in the
same row, which is the semistandard convention needed for the P tableau.
"""

import json
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

from magnons.errors import InvalidInputError, ParseError
from magnons.tableaux import StandardYoungTableau, WeylTableau

Word = Tuple[Any, ...]


@dataclass(frozen=True)
class RSStep:
    """Snapshot of (P, Q) after inserting the ``index``-th letter."""

    index: int
    letter: Any
    p: WeylTableau
    q: StandardYoungTableau

    def format(self) -> str:
        return f"step {self.index}: insert {self.letter} → P = {self.p.inline()}, Q = {self.q.inline()}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "step": self.index,
            "letter": self.letter,
            "p": self.p.to_dict(),
            "q": self.q.to_dict(),
        }


@dataclass(frozen=True)
class RSPair:
    """Result of RS insertion: P records letters, Q records positions."""

    word: Word
    p: WeylTableau
    q: StandardYoungTableau
    trace: Tuple[RSStep, ...] = ()

    @property
    def shape(self):
        return self.q.shape

    def format_trace(self) -> str:
        lines = [step.format() for step in self.trace]
        lines.append(f"RS({format_word(self.word)}) = ({self.p.inline()}, {self.q.inline()})")
        return "\n".join(lines)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "word": format_word(self.word),
            "p": self.p.to_dict(),
            "q": self.q.to_dict(),
            "steps": [step.to_dict() for step in self.trace],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def format_word(word: Sequence[Any]) -> str:
    return "".join(str(letter) for letter in word)


def parse_word(text: str) -> Tuple[int, ...]:
    """Parse a magnetic configuration such as ``"00100"`` into spin letters.

    Raises:
        ParseError: If any character is not ``0`` or ``1``.
    """
    bad = sorted({ch for ch in text if ch not in "01"})
    if bad:
        raise ParseError(f"Configuration {text!r} contains non-binary characters: {bad}")
    return tuple(int(ch) for ch in text)


def _row_insert(rows: List[List[Any]], letter: Any) -> int:
    """Insert ``letter`` into ``rows`` in place; return the row that grew."""
    for i, row in enumerate(rows):
        pos = bisect_right(row, letter)
        if pos == len(row):
            row.append(letter)
            return i
        letter, row[pos] = row[pos], letter
    rows.append([letter])
    return len(rows) - 1


def _snapshot(p_rows: List[List[Any]], q_rows: List[List[int]]) -> Tuple[WeylTableau, StandardYoungTableau]:
    return WeylTableau.from_rows(p_rows), StandardYoungTableau.from_rows(q_rows)


def rs_insert_word(word: Sequence[Any], keep_trace: bool = False) -> RSPair:
    """Run Schensted row insertion on ``word``.

    Args:
        word: Letters from a totally ordered alphabet; may be empty.
        keep_trace: Retain a (P, Q) snapshot after every insertion.

    Returns:
        RSPair with P and Q of equal shape.
    """
    p_rows: List[List[Any]] = []
    q_rows: List[List[int]] = []
    trace: List[RSStep] = []
    for index, letter in enumerate(word, start=1):
        grown = _row_insert(p_rows, letter)
        if grown == len(q_rows):
            q_rows.append([])
        q_rows[grown].append(index)
        if keep_trace:
            p, q = _snapshot(p_rows, q_rows)
            trace.append(RSStep(index=index, letter=letter, p=p, q=q))
    p, q = _snapshot(p_rows, q_rows)
    return RSPair(word=tuple(word), p=p, q=q, trace=tuple(trace))


def rs_inverse(p: WeylTableau, q: StandardYoungTableau) -> Word:
    """Recover the word whose RS pair is ``(p, q)`` by reverse bumping.

    Raises:
        InvalidInputError: If the two tableaux differ in shape.
    """
    if p.shape != q.shape:
        raise InvalidInputError(f"P has shape {p.shape} but Q has shape {q.shape}")
    p_rows = [list(row) for row in p.rows]
    q_rows = [list(row) for row in q.rows]
    word: List[Any] = [None] * q.n
    for index in range(q.n, 0, -1):
        i = next(r for r, row in enumerate(q_rows) if row and row[-1] == index)
        q_rows[i].pop()
        letter = p_rows[i].pop()
        for row in reversed(p_rows[:i]):
            pos = bisect_left(row, letter) - 1
            letter, row[pos] = row[pos], letter
        word[index - 1] = letter
        if not q_rows[i]:
            del q_rows[i]
            del p_rows[i]
    return tuple(word)
