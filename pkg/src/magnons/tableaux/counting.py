"""Counting identities behind the one-magnon Schur-Weyl labels.

Every count has a brute-force enumeration path; the closed forms (hook-length
formula, binomials) are checked against it rather than trusted.
"""

import logging
from math import comb, factorial, prod
from typing import Dict, Iterator, List, Optional, Tuple

from magnons.errors import InvalidInputError, InvalidSizeError, MagnonError, OutOfScopeError
from magnons.tableaux.partitions import Partition, two_row_partition, two_row_partitions
from magnons.tableaux.tableau import StandardYoungTableau, WeylTableau

logger = logging.getLogger(__name__)

SPIN_ALPHABET: Tuple[int, int] = (0, 1)


def _require_two_rows(shape: Partition) -> None:
    if shape.num_rows > 2:
        raise OutOfScopeError(f"Only shapes with at most two rows are supported, got {shape}")


def one_magnon_tableaux(n: int) -> List[StandardYoungTableau]:
    """Return the N labels of the one-magnon irreducible basis.

    The row tableau ``1 2 ... N`` of shape (N) comes first, then ``y_{j'}`` of
    shape (N-1,1) with second-row entry j' for j' = 2..N.

    Raises:
        InvalidSizeError: If ``n < 2``.
    """
    if n < 2:
        raise InvalidSizeError(f"A one-magnon ring needs N >= 2, got {n}")
    return [row_tableau(n)] + [hook_tableau(n, special) for special in range(2, n + 1)]


def hook_tableau(n: int, special: int) -> StandardYoungTableau:
    """Return ``y_{j'}`` for ``j' = special``: shape (N-1,1), second row [special]."""
    if n < 2:
        raise InvalidSizeError(f"A one-magnon ring needs N >= 2, got {n}")
    if not 2 <= special <= n:
        raise InvalidInputError(f"Second-row entry must lie in 2..{n}, got {special}")
    first = tuple(e for e in range(1, n + 1) if e != special)
    return StandardYoungTableau(Partition((n - 1, 1)), (first, (special,)))


def row_tableau(n: int) -> StandardYoungTableau:
    if n < 1:
        raise InvalidSizeError(f"Row tableau needs N >= 1, got {n}")
    return StandardYoungTableau(Partition((n,)), (tuple(range(1, n + 1)),))


def enumerate_syt(shape: Partition) -> Iterator[StandardYoungTableau]:
    """Yield every standard filling of a shape with at most two rows.

    Numbers are placed one at a time into any cell whose left and upper
    neighbours are already filled.
    """
    _require_two_rows(shape)
    n = shape.n
    grid: List[List[Optional[int]]] = [[None] * part for part in shape.parts]

    def fill(num: int) -> Iterator[StandardYoungTableau]:
        if num > n:
            yield StandardYoungTableau(shape, tuple(tuple(row) for row in grid))  # type: ignore[arg-type]
            return
        for i, row in enumerate(grid):
            j = next((c for c, v in enumerate(row) if v is None), None)
            if j is None:
                continue
            if i > 0 and grid[i - 1][j] is None:
                continue
            row[j] = num
            yield from fill(num + 1)
            row[j] = None

    yield from fill(1)


def hook_length_count(shape: Partition) -> int:
    """Number of standard tableaux of ``shape`` by the hook-length formula."""
    conj = shape.conjugate().parts
    hooks = (
        (part - j - 1) + (conj[j] - i - 1) + 1
        for i, part in enumerate(shape.parts)
        for j in range(part)
    )
    return factorial(shape.n) // prod(hooks)


def count_syt_two_row(shape: Partition) -> int:
    """Count SYT(shape) by enumeration and by hook lengths; both must agree.

    Raises:
        OutOfScopeError: If the shape has three or more rows.
    """
    _require_two_rows(shape)
    enumerated = sum(1 for _ in enumerate_syt(shape))
    fast = hook_length_count(shape)
    if enumerated != fast:
        raise MagnonError(
            f"SYT count mismatch for {shape}: enumeration {enumerated}, hook lengths {fast}"
        )
    logger.debug("SYT%s = %d", shape, fast)
    return fast


def enumerate_weyl_tableaux(shape: Partition, weight: Tuple[int, int]) -> List[WeylTableau]:
    """Every semistandard filling of ``shape`` with ``weight[0]`` zeros and ``weight[1]`` ones."""
    _require_two_rows(shape)
    zeros, ones = weight
    if zeros < 0 or ones < 0 or zeros + ones != shape.n:
        raise InvalidInputError(
            f"Weight {weight} does not fill the {shape.n} boxes of {shape}"
        )
    cells = [(i, j) for i, part in enumerate(shape.parts) for j in range(part)]
    grid: List[List[int]] = [[-1] * part for part in shape.parts]
    found: List[WeylTableau] = []

    def fits(i: int, j: int, letter: int) -> bool:
        if j > 0 and letter < grid[i][j - 1]:
            return False
        if i > 0 and letter <= grid[i - 1][j]:
            return False
        return True

    def backtrack(pos: int, remaining: Dict[int, int]) -> None:
        if pos == len(cells):
            found.append(WeylTableau(shape, tuple(tuple(row) for row in grid)))
            return
        i, j = cells[pos]
        for letter in SPIN_ALPHABET:
            if remaining[letter] == 0 or not fits(i, j, letter):
                continue
            grid[i][j] = letter
            remaining[letter] -= 1
            backtrack(pos + 1, remaining)
            remaining[letter] += 1
            grid[i][j] = -1

    backtrack(0, {0: zeros, 1: ones})
    return found


def kostka_two_letter(shape: Partition, weight: Tuple[int, int]) -> int:
    """Kostka number K_{shape, weight} for a two-letter weight, by enumeration."""
    return len(enumerate_weyl_tableaux(shape, weight))


def sector_dimension(n: int, r: int) -> int:
    """Dimension of the r-magnon sector of an N-qubit ring, binomial(N, r)."""
    if n < 0 or not 0 <= r <= n:
        raise InvalidInputError(f"Need 0 <= r <= N, got N={n}, r={r}")
    return comb(n, r)


def transitive_decomposition(n: int, r: int) -> Dict[Partition, int]:
    """Multiplicities of the irreps in the permutation action on the r-magnon sector.

    Returns the nonzero Kostka numbers K_{lambda,(N-r,r)} for two-row shapes
    lambda dominating the weight. For r = 1 this is {(N): 1, (N-1,1): 1}.
    """
    if n < 1 or not 0 <= r <= n:
        raise InvalidInputError(f"Need N >= 1 and 0 <= r <= N, got N={n}, r={r}")
    weight = (n - r, r)
    sorted_weight = two_row_partition(n, min(r, n - r))
    multiplicities: Dict[Partition, int] = {}
    for shape in two_row_partitions(n):
        if not shape.dominates(sorted_weight):
            continue
        k = kostka_two_letter(shape, weight)
        if k:
            multiplicities[shape] = k
    return multiplicities
