"""Wootters concurrence of two-qubit states and its one-magnon closed forms.

The spin flip uses complex conjugation, (sigma_y x sigma_y) rho* (sigma_y x
sigma_y). For real symmetric rho the conjugate equals the transpose, so this
matches the transpose form used for one-magnon states.

Two independent eigenvalue paths are provided. The numeric path diagonalizes
the Hermitian M = sqrt(rho) rho~ sqrt(rho), which shares its spectrum with
rho rho~. The oracle path solves the characteristic polynomial of rho rho~.
"""

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from magnons.concurrence.linalg import PSD_TOLERANCE, hermitian_sqrt, jacobi_eigh
from magnons.density import TwoQubitDensity
from magnons.errors import InvalidPairError, MagnonError, NumericalInstabilityError, RootFindingError
from magnons.states import validate_label
from magnons.tableaux import StandardYoungTableau

logger = logging.getLogger(__name__)

SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_YY = np.kron(SIGMA_Y, SIGMA_Y)

# Eigenvalues of rho*rho~ below this are rounding residue; their square roots
# would otherwise add ~1e-8 to the concurrence.
EIGENVALUE_FLOOR = 1e-13
STRUCTURAL_ZERO = 1e-15
ROOT_RESIDUAL_TOLERANCE = 1e-8
VALUE_TOLERANCE = 1e-12
# Roots of rho*rho~ lie in [0, 1]; rounded multiple roots spread far less than this.
CLUSTER_GAP = 1e-3
MULTIPLE_ROOT_TOLERANCE = 1e-12

Matrix = Union[TwoQubitDensity, np.ndarray]


def _as_matrix(rho: Matrix) -> np.ndarray:
    return rho.matrix if isinstance(rho, TwoQubitDensity) else np.asarray(rho, dtype=complex)


@dataclass(frozen=True)
class ConcurrenceResult:
    """Concurrence with the square roots of the four eigenvalues of rho*rho~."""

    value: float
    sqrt_eigs: Tuple[float, float, float, float]
    pair: Optional[Tuple[int, int]] = None

    def __post_init__(self) -> None:
        s = self.sqrt_eigs
        if len(s) != 4 or any(x < 0 for x in s) or any(a < b for a, b in zip(s, s[1:])):
            raise MagnonError(f"sqrt_eigs must be four non-negative decreasing values: {s}")
        expected = max(s[0] - s[1] - s[2] - s[3], 0.0)
        if abs(self.value - expected) > VALUE_TOLERANCE or not 0.0 <= self.value <= 1.0:
            raise MagnonError(f"Concurrence {self.value!r} inconsistent with {s}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "pair": list(self.pair) if self.pair else None,
            "value": self.value,
            "sqrt_eigs": list(self.sqrt_eigs),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def spin_flip(rho: Matrix) -> np.ndarray:
    """Return (sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y)."""
    return SIGMA_YY @ np.conj(_as_matrix(rho)) @ SIGMA_YY


def _result_from_eigenvalues(
    eigenvalues: Sequence[float], pair: Optional[Tuple[int, int]]
) -> ConcurrenceResult:
    cleaned: List[float] = []
    for r in eigenvalues:
        if r < -PSD_TOLERANCE:
            raise NumericalInstabilityError(f"Eigenvalue {r!r} of rho*rho~ is negative")
        cleaned.append(0.0 if r < EIGENVALUE_FLOOR else float(r))
    roots = sorted((float(np.sqrt(r)) for r in cleaned), reverse=True)
    value = min(max(roots[0] - roots[1] - roots[2] - roots[3], 0.0), 1.0)
    return ConcurrenceResult(value=value, sqrt_eigs=tuple(roots), pair=pair)  # type: ignore[arg-type]


def _pair_of(rho: Matrix) -> Optional[Tuple[int, int]]:
    return rho.pair if isinstance(rho, TwoQubitDensity) else None


def concurrence_numeric(rho: Matrix) -> ConcurrenceResult:
    """Concurrence via the Hermitian similarity sqrt(rho) rho~ sqrt(rho).

    Raises:
        NumericalInstabilityError: If rho or M has an eigenvalue below -1e-10.
    """
    matrix = _as_matrix(rho)
    root = hermitian_sqrt(matrix)
    m = root @ spin_flip(matrix) @ root
    eigenvalues, _ = jacobi_eigh(m)
    return _result_from_eigenvalues(eigenvalues, _pair_of(rho))


def _deflate_structural_zeros(r: np.ndarray) -> Tuple[np.ndarray, int]:
    """Strip indices whose row or column vanishes; each contributes a zero eigenvalue."""
    zeros = 0
    while r.shape[0]:
        idx = next(
            (
                i
                for i in range(r.shape[0])
                if np.all(np.abs(r[i, :]) <= STRUCTURAL_ZERO)
                or np.all(np.abs(r[:, i]) <= STRUCTURAL_ZERO)
            ),
            None,
        )
        if idx is None:
            break
        keep = [i for i in range(r.shape[0]) if i != idx]
        r = r[np.ix_(keep, keep)]
        zeros += 1
    return r, zeros


def characteristic_polynomial(r: np.ndarray) -> np.ndarray:
    """Monic characteristic polynomial (highest degree first) by Faddeev-LeVerrier."""
    n = r.shape[0]
    coeffs = [1.0 + 0j]
    m = np.zeros_like(r)
    identity = np.eye(n, dtype=r.dtype)
    for k in range(1, n + 1):
        m = r @ m + coeffs[-1] * identity
        coeffs.append(-np.trace(r @ m) / k)
    return np.array(coeffs)


def _polish(poly: np.ndarray, root: float) -> float:
    deriv = np.polyder(poly)
    for _ in range(5):
        slope = np.polyval(deriv, root)
        if slope == 0:
            break
        candidate = root - np.polyval(poly, root) / slope
        if abs(np.polyval(poly, candidate)) >= abs(np.polyval(poly, root)):
            break
        root = candidate
    return root


def _root_clusters(roots: np.ndarray) -> List[List[complex]]:
    """Group roots whose real parts chain together within ``CLUSTER_GAP``."""
    clusters: List[List[complex]] = []
    for root in sorted(roots, key=lambda z: z.real):
        if clusters and abs(root - clusters[-1][-1]) <= CLUSTER_GAP:
            clusters[-1].append(root)
        else:
            clusters.append([root])
    return clusters


def _is_multiple_root(poly: np.ndarray, center: float, multiplicity: int) -> bool:
    """True if p and its first ``multiplicity - 1`` derivatives vanish at ``center``."""
    for order in range(multiplicity):
        deriv = np.polyder(poly, order)
        scale = max(float(np.max(np.abs(deriv))), 1.0)
        if abs(np.polyval(deriv, center)) > MULTIPLE_ROOT_TOLERANCE * scale:
            return False
    return True


def _solve_real_roots(poly: np.ndarray) -> List[float]:
    """Real roots of ``poly`` with multiplicity.

    A rounded m-fold root comes back from ``np.roots`` as m points spread by
    about eps^(1/m); their mean stays accurate to eps. Such a cluster is
    replaced by its mean, refined on the (m-1)-th derivative where the root is
    simple. Clusters that are not a multiple root are polished one by one.
    """
    solved: List[float] = []
    for cluster in _root_clusters(np.roots(poly)):
        m = len(cluster)
        center = float(np.mean(cluster).real)
        if m > 1 and _is_multiple_root(poly, center, m):
            solved.extend([_polish(np.polyder(poly, m - 1), center)] * m)
        else:
            solved.extend(_polish(poly, float(z.real)) for z in cluster)
    return solved


def concurrence_oracle(rho: Matrix) -> ConcurrenceResult:
    """Concurrence from the roots of the characteristic polynomial of rho*rho~.

    Rows or columns of rho*rho~ that vanish identically (the 11 slot of a
    one-magnon state) are deflated first as exact zero roots; the remaining
    polynomial is solved with repeated roots merged, and each root polished
    by Newton steps.

    Raises:
        RootFindingError: If a root's residual exceeds 1e-8.
    """
    matrix = _as_matrix(rho)
    product = matrix @ spin_flip(matrix)
    block, zero_count = _deflate_structural_zeros(product)
    eigenvalues = [0.0] * zero_count
    if block.shape[0]:
        poly = characteristic_polynomial(block).real
        for root in _solve_real_roots(poly):
            residual = abs(np.polyval(poly, root))
            if residual > ROOT_RESIDUAL_TOLERANCE:
                raise RootFindingError(f"Root {root!r} of rho*rho~ has residual {residual:.3e}")
            eigenvalues.append(root)
    logger.debug("Oracle eigenvalues %s (%d deflated)", eigenvalues, zero_count)
    return _result_from_eigenvalues(eigenvalues, _pair_of(rho))


def _check_closed_form_pair(n: int, j: int, k: int) -> None:
    if not 1 <= j < k <= n:
        raise InvalidPairError(f"Closed forms need 1 <= j < k <= {n}, got ({j}, {k})")


def concurrence_fraction(n: int, label: StandardYoungTableau, j: int, k: int) -> Fraction:
    """Exact concurrence of nodes (j, k) in the Schur-Weyl state |label>.

    Shape (N): 2/N everywhere. Shape (N-1,1) with second-row entry s:
    2/(s(s-1)) among nodes 1..s-1, 2/s between node s and an earlier node,
    0 whenever a node beyond s is involved.
    """
    validate_label(n, label)
    _check_closed_form_pair(n, j, k)
    s = label.second_row_entry
    if s is None:
        return Fraction(2, n)
    if k < s:
        return Fraction(2, s * (s - 1))
    if k == s:
        return Fraction(2, s)
    return Fraction(0)


def concurrence_closed_form(n: int, label: StandardYoungTableau, j: int, k: int) -> float:
    """Float form of ``concurrence_fraction``.

    Raises:
        InvalidInputError: For an invalid label or pair.
    """
    return float(concurrence_fraction(n, label, j, k))
