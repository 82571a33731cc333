"""One-magnon Schur-Weyl states and their embedding into the full tensor space.

Node indices are 1-based at every interface. The full 2^N vector is ordered by
the binary value of the configuration word with node 1 as the most
significant bit, so |j> sits at index ``2 ** (N - j)``.
"""

import json
import logging
from dataclasses import dataclass, field
from itertools import groupby
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from magnons.config import env
from magnons.errors import InvalidInputError, InvalidSizeError, MagnonError, ResourceLimitError
from magnons.states.amplitudes import ExactAmplitude, exact_amplitude, validate_label
from magnons.tableaux import StandardYoungTableau, one_magnon_tableaux

logger = logging.getLogger(__name__)

NORM_TOLERANCE = 1e-12


def _readonly(values: np.ndarray) -> np.ndarray:
    values.setflags(write=False)
    return values


@dataclass(frozen=True, eq=False)
class OneMagnonState:
    """Real amplitudes a_j = <j|psi> over the node basis |1>..|N>.

    ``label`` and ``exact`` are set for Schur-Weyl basis states; a generic
    one-magnon superposition carries neither.
    """

    n: int
    amplitudes: np.ndarray
    label: Optional[StandardYoungTableau] = None
    exact: Optional[Tuple[ExactAmplitude, ...]] = None

    def __post_init__(self) -> None:
        values = np.array(self.amplitudes, dtype=float)
        if values.shape != (self.n,):
            raise InvalidInputError(f"Expected {self.n} amplitudes, got shape {values.shape}")
        object.__setattr__(self, "amplitudes", _readonly(values))
        if self.exact is not None and sum(a.squared for a in self.exact) != 1:
            raise MagnonError(f"Exact amplitudes of {self.describe()} are not normalized")
        norm = float(values @ values)
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise MagnonError(f"State {self.describe()} has squared norm {norm!r}")

    @classmethod
    def from_amplitudes(cls, values: Sequence[float]) -> "OneMagnonState":
        values = np.asarray(values, dtype=float)
        return cls(n=len(values), amplitudes=values)

    def amplitude(self, j: int) -> float:
        if not 1 <= j <= self.n:
            raise InvalidInputError(f"Node {j} outside 1..{self.n}")
        return float(self.amplitudes[j - 1])

    @property
    def support(self) -> List[int]:
        return [j for j in range(1, self.n + 1) if self.amplitudes[j - 1] != 0.0]

    def describe(self) -> str:
        return f"|{self.label.inline()}>" if self.label is not None else f"psi(N={self.n})"

    def render(self) -> str:
        """Signed ket expansion, special node first, e.g. ``√3/2 |4⟩ − √3/6 (|1⟩+|2⟩+|3⟩)``."""
        if self.exact is not None:
            terms = [(a.value, a.render(), j) for j, a in enumerate(self.exact, start=1) if a.sign]
        else:
            terms = [(v, f"{v:.10g}", j) for j, v in enumerate(self.amplitudes, start=1) if v]
        terms.sort(key=lambda t: (-t[0], t[2]))
        pieces: List[str] = []
        for (_, text), group in groupby(terms, key=lambda t: (t[0], t[1])):
            kets = [f"|{j}⟩" for _, _, j in group]
            negative = text.startswith("−") or text.startswith("-")
            magnitude = text.lstrip("−-")
            body = f"{magnitude} {kets[0]}" if len(kets) == 1 else f"{magnitude} ({'+'.join(kets)})"
            if not pieces:
                pieces.append(f"−{body}" if negative else body)
            else:
                pieces.append(f"{'−' if negative else '+'} {body}")
        return " ".join(pieces) if pieces else "0"

    def to_dict(self) -> Dict[str, Any]:
        if self.exact is not None:
            amplitudes: List[Any] = [a.to_dict() for a in self.exact]
        else:
            amplitudes = [{"float": float(v)} for v in self.amplitudes]
        return {
            "n": self.n,
            "label": self.label.to_dict() if self.label is not None else None,
            "amplitudes": amplitudes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


@dataclass(frozen=True, eq=False)
class FullStateVector:
    """All 2^N complex amplitudes over the computational basis."""

    n: int
    entries: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        values = np.array(self.entries, dtype=complex)
        if values.shape != (2**self.n,):
            raise InvalidInputError(f"Expected {2**self.n} entries, got shape {values.shape}")
        object.__setattr__(self, "entries", _readonly(values))
        norm = float(np.vdot(values, values).real)
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise MagnonError(f"Full state on {self.n} qubits has squared norm {norm!r}")

    @classmethod
    def product_zero(cls, n: int) -> "FullStateVector":
        """The ferromagnetic vacuum |00...0>."""
        entries = np.zeros(2**n, dtype=complex)
        entries[0] = 1.0
        return cls(n=n, entries=entries)

    def as_tensor(self) -> np.ndarray:
        """View with one length-2 axis per node, axis 0 being node 1."""
        return self.entries.reshape([2] * self.n)


def node_index(n: int, j: int) -> int:
    """Position of the weight-1 word |j> in the full vector."""
    return 1 << (n - j)


def build_state(n: int, label: StandardYoungTableau) -> OneMagnonState:
    """Construct |lambda y> = sum_j <j|lambda y> |j>.

    Raises:
        InvalidLabelError: If ``label`` is not a one-magnon label for ``n``.
    """
    validate_label(n, label)
    exact = tuple(exact_amplitude(n, label, j) for j in range(1, n + 1))
    values = np.array([a.value for a in exact])
    return OneMagnonState(n=n, amplitudes=values, label=label, exact=exact)


def build_basis(n: int) -> List[OneMagnonState]:
    """All N Schur-Weyl states, ordered as ``one_magnon_tableaux``."""
    return [build_state(n, label) for label in one_magnon_tableaux(n)]


def check_cap(n: int, cap: Optional[int] = None) -> int:
    """Raise if a 2^N tensor would exceed the brute-force cap; return the cap used."""
    limit = env.brute_force_cap if cap is None else cap
    if n > limit:
        raise ResourceLimitError(
            f"N={n} exceeds the brute-force cap {limit} (set MAGNONS_BRUTE_FORCE_CAP or --cap)"
        )
    return limit


def embed_full(state: OneMagnonState, cap: Optional[int] = None) -> FullStateVector:
    """Place the N node amplitudes into the 2^N computational basis.

    Raises:
        ResourceLimitError: If ``state.n`` exceeds the brute-force cap.
    """
    check_cap(state.n, cap)
    entries = np.zeros(2**state.n, dtype=complex)
    for j in range(1, state.n + 1):
        entries[node_index(state.n, j)] = state.amplitudes[j - 1]
    logger.debug("Embedded %s into %d entries", state.describe(), entries.size)
    return FullStateVector(n=state.n, entries=entries)


def gram_matrix(n: int) -> np.ndarray:
    """Pairwise inner products of the N basis states; the identity for an orthonormal basis."""
    if n < 2:
        raise InvalidSizeError(f"Gram matrix needs N >= 2, got {n}")
    vectors = np.stack([state.amplitudes for state in build_basis(n)])
    return vectors @ vectors.T
