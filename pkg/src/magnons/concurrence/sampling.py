"""Random two-qubit inputs for robustness checks."""

from typing import Tuple

import numpy as np

from magnons.density import TwoQubitDensity


def random_density(rng: np.random.Generator, pair: Tuple[int, int] = (1, 2)) -> TwoQubitDensity:
    """Full-rank PSD unit-trace 4x4 matrix, G G^dagger / tr with complex Gaussian G."""
    g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = g @ g.conj().T
    rho = rho / np.trace(rho).real
    return TwoQubitDensity(pair=pair, matrix=(rho + rho.conj().T) / 2)


def random_unitary(rng: np.random.Generator, dim: int = 2) -> np.ndarray:
    """Haar-random unitary from the QR decomposition of a complex Gaussian matrix."""
    z = (rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    phases = np.diag(r) / np.abs(np.diag(r))
    return q * phases


def apply_local_unitaries(
    rho: TwoQubitDensity, left: np.ndarray, right: np.ndarray
) -> TwoQubitDensity:
    """Return (U_left x U_right) rho (U_left x U_right)^dagger."""
    u = np.kron(left, right)
    rotated = u @ rho.matrix @ u.conj().T
    return TwoQubitDensity(pair=rho.pair, matrix=(rotated + rotated.conj().T) / 2)
