"""Two-qubit reduced density matrices: analytic fast path and partial-trace oracle."""

from magnons.density.reduced import (
    BASIS_LABELS,
    TwoQubitDensity,
    all_pairs,
    reduced_density_fast,
    reduced_density_oracle,
    single_qubit_marginal,
)

__all__ = [
    "BASIS_LABELS",
    "TwoQubitDensity",
    "all_pairs",
    "reduced_density_fast",
    "reduced_density_oracle",
    "single_qubit_marginal",
]
