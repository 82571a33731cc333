"""Wootters concurrence: numeric, polynomial-oracle and closed-form paths."""

from magnons.concurrence.linalg import hermitian_sqrt, jacobi_eigh
from magnons.concurrence.sampling import apply_local_unitaries, random_density, random_unitary
from magnons.concurrence.wootters import (
    SIGMA_YY,
    ConcurrenceResult,
    characteristic_polynomial,
    concurrence_closed_form,
    concurrence_fraction,
    concurrence_numeric,
    concurrence_oracle,
    spin_flip,
)

__all__ = [
    "SIGMA_YY",
    "apply_local_unitaries",
    "random_density",
    "random_unitary",
    "ConcurrenceResult",
    "characteristic_polynomial",
    "concurrence_closed_form",
    "concurrence_fraction",
    "concurrence_numeric",
    "concurrence_oracle",
    "hermitian_sqrt",
    "jacobi_eigh",
    "spin_flip",
]
