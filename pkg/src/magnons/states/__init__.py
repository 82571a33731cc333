"""One-magnon Schur-Weyl states: exact amplitudes, vectors and full-space embedding."""

from magnons.states.amplitudes import ExactAmplitude, amplitude, exact_amplitude, validate_label
from magnons.states.states import (
    FullStateVector,
    OneMagnonState,
    build_basis,
    build_state,
    check_cap,
    embed_full,
    gram_matrix,
    node_index,
)

__all__ = [
    "ExactAmplitude",
    "FullStateVector",
    "OneMagnonState",
    "amplitude",
    "build_basis",
    "build_state",
    "check_cap",
    "embed_full",
    "exact_amplitude",
    "gram_matrix",
    "node_index",
    "validate_label",
]
