"""Run configuration shared by the CLI subcommands."""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Union

from magnons.config import env
from magnons.errors import InvalidInputError, InvalidSizeError, ResourceLimitError
from magnons.tableaux import StandardYoungTableau, hook_tableau, one_magnon_tableaux, row_tableau

ALL = "all"
ROW = "row"

Selector = Union[int, str]


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    DOT = "dot"


class RunMode(str, Enum):
    CLOSED = "closed"
    NUMERIC = "numeric"
    VERIFY = "verify"


@dataclass(frozen=True)
class RunConfig:
    """Parsed command options.

    ``selector`` is ``"row"``, ``"all"`` or the second-row entry s of a hook
    label. Verify mode touches the full 2^N oracle, so it is bounded by ``cap``.
    """

    n: int
    selector: Selector = ALL
    output: OutputFormat = OutputFormat.TEXT
    mode: RunMode = RunMode.CLOSED
    cap: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "output", OutputFormat(self.output))
        object.__setattr__(self, "mode", RunMode(self.mode))
        if self.cap is None:
            object.__setattr__(self, "cap", env.brute_force_cap)
        if self.n < 2:
            raise InvalidSizeError(f"--n must be at least 2, got {self.n}")
        if isinstance(self.selector, int):
            if not 2 <= self.selector <= self.n:
                raise InvalidInputError(f"--second-row must lie in 2..{self.n}, got {self.selector}")
        elif self.selector not in (ROW, ALL):
            raise InvalidInputError(f"Unknown label selector {self.selector!r}")
        if self.mode is RunMode.VERIFY and self.n > self.cap:
            raise ResourceLimitError(f"N={self.n} exceeds the brute-force cap {self.cap}")

    def labels(self) -> List[StandardYoungTableau]:
        if self.selector == ALL:
            return one_magnon_tableaux(self.n)
        if self.selector == ROW:
            return [row_tableau(self.n)]
        return [hook_tableau(self.n, self.selector)]
