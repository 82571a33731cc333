"""Small dense Hermitian eigensolver (cyclic Jacobi) and matrix square root.

Sized for the 4x4 matrices of two-qubit states; convergence is quadratic so a
handful of sweeps reaches machine precision.
"""

import logging
from typing import Tuple

import numpy as np

from magnons.errors import NumericalInstabilityError

logger = logging.getLogger(__name__)

OFF_DIAGONAL_TOLERANCE = 1e-14
MAX_SWEEPS = 50
PSD_TOLERANCE = 1e-10


def _off_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def jacobi_eigh(matrix: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Eigen-decompose a Hermitian matrix by cyclic complex Jacobi rotations.

    Each rotation first removes the phase of the pivot a_pq, then applies the
    real rotation that zeroes it.

    Returns:
        ``(w, V)`` with eigenvalues ``w`` ascending and eigenvectors as the
        columns of ``V``.

    Raises:
        NumericalInstabilityError: If the sweeps do not converge.
    """
    a = np.array(matrix, dtype=complex)
    a = (a + a.conj().T) / 2
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = max(float(np.linalg.norm(a)), np.finfo(float).tiny)

    for sweep in range(MAX_SWEEPS):
        if _off_norm(a) <= OFF_DIAGONAL_TOLERANCE * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                magnitude = abs(apq)
                if magnitude <= 1e-18 * scale:
                    continue
                phase = np.conj(apq) / magnitude
                theta = (a[q, q].real - a[p, p].real) / (2.0 * magnitude)
                sign = 1.0 if theta >= 0.0 else -1.0
                t = sign / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rot = np.eye(n, dtype=complex)
                rot[p, p] = c
                rot[p, q] = s
                rot[q, p] = -s * phase
                rot[q, q] = c * phase
                a = rot.conj().T @ a @ rot
                a[p, q] = a[q, p] = 0.0
                a = (a + a.conj().T) / 2
                v = v @ rot
    else:
        raise NumericalInstabilityError(
            f"Jacobi did not converge in {MAX_SWEEPS} sweeps (off-norm {_off_norm(a):.3e})"
        )
    logger.debug("Jacobi converged after %d sweeps", sweep)

    w = np.diag(a).real
    order = np.argsort(w)
    return w[order], v[:, order]


def hermitian_sqrt(matrix: np.ndarray) -> np.ndarray:
    """Principal square root of a PSD Hermitian matrix.

    Eigenvalues in (-1e-10, 0) are clamped to zero.

    Raises:
        NumericalInstabilityError: If an eigenvalue lies below -1e-10.
    """
    w, v = jacobi_eigh(matrix)
    if w.min() < -PSD_TOLERANCE:
        raise NumericalInstabilityError(f"Matrix is not PSD: eigenvalue {w.min()!r}")
    roots = np.sqrt(np.clip(w, 0.0, None))
    return (v * roots) @ v.conj().T
