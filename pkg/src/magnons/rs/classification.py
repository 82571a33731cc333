"""One-magnon specialization of RS and the combinatorial classification.

For the configuration |j> (a single 1 at node j, zeros elsewhere) the first
0 after the 1 bumps it into the second row, so Q gets second-row entry j+1.
When j = N nothing follows the 1 and the tableaux stay a single row.

Note on indexing: the tableau y_{j'} whose amplitude peaks at node j is the
one with j' = j, while RS(|j>) carries j' = j + 1. The two labelings differ
by one and are not meant to coincide.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional

from magnons.config import env
from magnons.errors import InvalidInputError, InvalidSizeError, MagnonError
from magnons.rs.insertion import RSPair, Word, rs_insert_word
from magnons.tableaux import StandardYoungTableau, hook_tableau, one_magnon_tableaux, row_tableau

logger = logging.getLogger(__name__)


def configuration_word(n: int, j: int) -> Word:
    """Return the length-N spin word with its single 1 at node ``j`` (1-based)."""
    if n < 1:
        raise InvalidSizeError(f"Configuration needs N >= 1, got {n}")
    if not 1 <= j <= n:
        raise InvalidInputError(f"Node {j} outside 1..{n}")
    return tuple(1 if node == j else 0 for node in range(1, n + 1))


def one_magnon_configurations(n: int) -> List[Word]:
    return [configuration_word(n, j) for j in range(1, n + 1)]


def expected_recording_tableau(n: int, j: int) -> StandardYoungTableau:
    """Closed form of Q(|j>): hook with second row [j+1], or the row tableau if j = N."""
    return row_tableau(n) if j == n else hook_tableau(n, j + 1)


def rs_one_magnon(n: int, j: int, keep_trace: bool = False) -> RSPair:
    """Run RS on the configuration |j> and check it against the closed form.

    Raises:
        InvalidInputError: If ``j`` is outside 1..N.
    """
    pair = rs_insert_word(configuration_word(n, j), keep_trace=keep_trace)
    expected = expected_recording_tableau(n, j)
    if pair.q != expected:
        raise MagnonError(
            f"RS(|{j}>) for N={n} gave Q={pair.q.inline()}, closed form says {expected.inline()}"
        )
    return pair


def classify_all_configurations(
    n: int, max_workers: Optional[int] = None
) -> Dict[Word, StandardYoungTableau]:
    """Map every one-magnon configuration to its RS recording tableau.

    The image is checked to be exactly the N labels of the irreducible basis,
    each hit once.

    Raises:
        InvalidSizeError: If ``n < 2``.
    """
    if n < 2:
        raise InvalidSizeError(f"Classification needs N >= 2, got {n}")
    nodes = range(1, n + 1)
    with ThreadPoolExecutor(max_workers=max_workers or env.max_workers) as executor:
        pairs = list(executor.map(lambda j: rs_one_magnon(n, j), nodes))

    classification = {pair.word: pair.q for pair in pairs}
    image = list(classification.values())
    if len(set(image)) != len(image):
        raise MagnonError(f"RS is not injective on one-magnon configurations for N={n}")
    if set(image) != set(one_magnon_tableaux(n)):
        raise MagnonError(f"RS image for N={n} is not the one-magnon label set")
    logger.debug("Classified %d configurations for N=%d", len(classification), n)
    return classification


def two_line_notation(word: Word) -> str:
    """Render positions over letters, e.g. ``12345`` above ``00100``."""
    width = len(str(len(word))) if word else 1
    sep = " " if width > 1 else ""
    top = sep.join(str(pos).rjust(width) for pos in range(1, len(word) + 1))
    bottom = sep.join(str(letter).rjust(width) for letter in word)
    return f"{top}\n{bottom}"
