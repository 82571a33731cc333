"""Two-qubit reduced density matrices of pure one-magnon states.

The fast path reads the reduced matrix straight off the N node amplitudes.
The oracle path traces the full 2^N state over the other N-2 qubits, i.e. it
sums a(..i_j..i_k..) a*(..i'_j..i'_k..) over every assignment of the
remaining indices, and serves only to cross-check the fast path.

Slot order is (first node, second node), so the basis (00, 01, 10, 11) puts
the first node on the left. Entries stay complex so the oracle also covers
states with complex amplitudes.
"""

import json
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from magnons.errors import InvalidInputError, InvalidPairError, NumericalInstabilityError
from magnons.states import FullStateVector, OneMagnonState, check_cap

logger = logging.getLogger(__name__)

ENTRY_TOLERANCE = 1e-12
PSD_TOLERANCE = 1e-10

BASIS_LABELS: Tuple[str, ...] = ("00", "01", "10", "11")
# 01 <-> 10 exchange, the effect of swapping the two slots
SLOT_SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)


def _readonly(values: np.ndarray) -> np.ndarray:
    values.setflags(write=False)
    return values


@dataclass(frozen=True, eq=False)
class TwoQubitDensity:
    """4x4 Hermitian, unit-trace, PSD matrix for the qubit pair ``pair``."""

    pair: Tuple[int, int]
    matrix: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        rho = np.array(self.matrix, dtype=complex)
        if rho.shape != (4, 4):
            raise InvalidInputError(f"Two-qubit density must be 4x4, got {rho.shape}")
        object.__setattr__(self, "matrix", _readonly(rho))
        if np.max(np.abs(rho - rho.conj().T)) > ENTRY_TOLERANCE:
            raise NumericalInstabilityError(f"Density for pair {self.pair} is not Hermitian")
        if abs(np.trace(rho) - 1.0) > ENTRY_TOLERANCE:
            raise NumericalInstabilityError(
                f"Density for pair {self.pair} has trace {np.trace(rho)!r}"
            )
        lowest = float(np.linalg.eigvalsh(rho).min())
        if lowest < -PSD_TOLERANCE:
            raise NumericalInstabilityError(
                f"Density for pair {self.pair} has negative eigenvalue {lowest!r}"
            )

    @classmethod
    def from_pure(cls, psi, pair: Tuple[int, int] = (1, 2)) -> "TwoQubitDensity":
        """Projector onto a normalized two-qubit vector in the (00, 01, 10, 11) basis."""
        psi = np.asarray(psi, dtype=complex)
        return cls(pair=pair, matrix=np.outer(psi, psi.conj()))

    def entry(self, row: str, col: str) -> complex:
        return complex(self.matrix[BASIS_LABELS.index(row), BASIS_LABELS.index(col)])

    def swapped(self) -> "TwoQubitDensity":
        """Same reduced state with the slots exchanged."""
        return TwoQubitDensity(
            pair=(self.pair[1], self.pair[0]), matrix=SLOT_SWAP @ self.matrix @ SLOT_SWAP
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pair": list(self.pair),
            "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in self.matrix],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def all_pairs(n: int) -> List[Tuple[int, int]]:
    """Every pair (j, k) with 1 <= j < k <= n."""
    return list(combinations(range(1, n + 1), 2))


def _check_pair(n: int, j: int, k: int) -> None:
    if j == k or not (1 <= j <= n and 1 <= k <= n):
        raise InvalidPairError(f"Pair ({j}, {k}) is not two distinct nodes of 1..{n}")


def reduced_density_fast(state: OneMagnonState, j: int, k: int) -> TwoQubitDensity:
    """Reduced density of nodes (j, k) from the node amplitudes alone.

    Raises:
        InvalidPairError: If ``j == k`` or either node is out of range.
    """
    _check_pair(state.n, j, k)
    a = state.amplitudes
    a_j, a_k = a[j - 1], a[k - 1]
    spectators = [m for m in range(state.n) if m not in (j - 1, k - 1)]
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = float(np.sum(np.abs(a[spectators]) ** 2))
    rho[1, 1] = abs(a_k) ** 2
    rho[2, 2] = abs(a_j) ** 2
    rho[1, 2] = a_k * np.conj(a_j)
    rho[2, 1] = a_j * np.conj(a_k)
    return TwoQubitDensity(pair=(j, k), matrix=rho)


def reduced_density_oracle(
    full: FullStateVector, j: int, k: int, cap: Optional[int] = None
) -> TwoQubitDensity:
    """Partial trace of the full state over every qubit except j and k.

    Raises:
        ResourceLimitError: If ``full.n`` exceeds the brute-force cap.
        InvalidPairError: If ``j == k`` or either node is out of range.
    """
    check_cap(full.n, cap)
    _check_pair(full.n, j, k)
    kept = np.moveaxis(full.as_tensor(), [j - 1, k - 1], [0, 1]).reshape(4, -1)
    rho = kept @ kept.conj().T
    return TwoQubitDensity(pair=(j, k), matrix=rho)


def single_qubit_marginal(rho: TwoQubitDensity, slot: int) -> np.ndarray:
    """Trace out one slot of a two-qubit density; ``slot`` 0 keeps the left qubit."""
    if slot not in (0, 1):
        raise InvalidPairError(f"Slot must be 0 or 1, got {slot}")
    tensor = rho.matrix.reshape(2, 2, 2, 2)
    if slot == 0:
        return np.trace(tensor, axis1=1, axis2=3)
    return np.trace(tensor, axis1=0, axis2=2)
