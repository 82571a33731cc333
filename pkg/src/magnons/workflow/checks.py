"""Cross-checks run by the verification graph.

Each check compares two independent routes to the same quantity (closed form
against enumeration, analytic path against brute-force oracle) for every
system size N = 2..n_max. Sizes fan out over a thread pool and the outcomes
are merged by N.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from math import comb
from typing import Any, Dict, List, Optional

import numpy as np

from magnons.concurrence import (
    apply_local_unitaries,
    concurrence_closed_form,
    concurrence_numeric,
    concurrence_oracle,
    random_density,
    random_unitary,
)
from magnons.config import env
from magnons.density import (
    all_pairs,
    reduced_density_fast,
    reduced_density_oracle,
    single_qubit_marginal,
)
from magnons.entangled_graphs import EdgeClass, GraphMode, build_graph, graph_equal
from magnons.rs import (
    classify_all_configurations,
    rs_insert_word,
    rs_inverse,
)
from magnons.states import build_basis, embed_full, gram_matrix
from magnons.tableaux import (
    Partition,
    count_syt_two_row,
    hook_tableau,
    kostka_two_letter,
    one_magnon_tableaux,
    sector_dimension,
    transitive_decomposition,
    two_row_partitions,
)
from magnons.workflow.state import CheckOutcome, VerificationState

logger = logging.getLogger(__name__)

DENSITY_TOLERANCE = 1e-12
CONCURRENCE_TOLERANCE = 1e-9
RANDOM_SAMPLES = 100
ALL_WORDS_LIMIT = 10


class BaseCheck:
    """Base class for verification checks.

    Subclasses set ``name`` and implement ``check``, which returns a list of
    failure messages (empty when everything holds).
    """

    # Node name in the verification graph
    name: str = "base_check"
    # Human-friendly name for progress output
    display_name: str = "Base Check"
    description: str = ""

    def __init__(self, cap: int, settings: Optional[Dict[str, Any]] = None):
        self.cap = cap
        self.settings = settings or {}

    def sizes(self, n_max: int) -> List[Optional[int]]:
        return list(range(2, n_max + 1))

    def check(self, n: Optional[int]) -> List[str]:
        raise NotImplementedError

    def _safe_check(self, n: Optional[int]) -> CheckOutcome:
        try:
            failures = self.check(n)
        except Exception as e:
            failures = [f"{type(e).__name__}: {e}"]
        if failures:
            logger.debug("%s failed at N=%s: %s", self.name, n, failures)
        return CheckOutcome(check=self.name, n=n, passed=not failures, failures=failures)

    def run(self, state: VerificationState) -> List[CheckOutcome]:
        """Run the check for every size and return outcomes ordered by N."""
        sizes = self.sizes(state["n_max"])
        workers = state.get("max_workers") or env.max_workers
        with ThreadPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(self._safe_check, sizes))


class TableauxCountsCheck(BaseCheck):
    name = "tableaux_counts"
    display_name = "Tableaux and dimension identities"
    description = "|labels| = N = 1 + |SYT(N-1,1)|, hook lengths = enumeration, sector sums"

    def check(self, n: Optional[int]) -> List[str]:
        failures = []
        labels = one_magnon_tableaux(n)
        hook_count = count_syt_two_row(Partition((n - 1, 1)))
        if not len(labels) == n == 1 + hook_count:
            failures.append(f"{len(labels)} labels, |SYT(N-1,1)| = {hook_count}")
        for shape in two_row_partitions(n):
            count_syt_two_row(shape)
        total = sum(sector_dimension(n, r) for r in range(n + 1))
        if total != 2**n:
            failures.append(f"sector dimensions sum to {total}, not 2^N")
        for r in range(n + 1):
            multiplicities = transitive_decomposition(n, r)
            dim = sum(k * count_syt_two_row(shape) for shape, k in multiplicities.items())
            if dim != comb(n, r):
                failures.append(f"r={r}: irreps give dimension {dim}, sector has {comb(n, r)}")
        return failures


class KostkaCheck(BaseCheck):
    name = "kostka"
    display_name = "Two-letter Kostka numbers"
    description = "K(lambda, mu) is 0 or 1 for every two-row shape and two-letter weight"

    def check(self, n: Optional[int]) -> List[str]:
        failures = []
        for shape in two_row_partitions(n):
            for r in range(n + 1):
                k = kostka_two_letter(shape, (n - r, r))
                if k not in (0, 1):
                    failures.append(f"K{shape},({n - r},{r}) = {k}")
        return failures


class RSBijectionCheck(BaseCheck):
    name = "rs_bijection"
    display_name = "RS on one-magnon configurations"
    description = "RS maps the N configurations onto the N labels; P is (0...0 / 1) or the row (0...0 1)"

    def check(self, n: Optional[int]) -> List[str]:
        failures = []
        classification = classify_all_configurations(n, max_workers=1)
        for word, q in classification.items():
            pair = rs_insert_word(word)
            p_rows = pair.p.rows
            if len(p_rows) == 1:
                # spin deviation on the last node never bumps
                if p_rows[0] != (0,) * (n - 1) + (1,):
                    failures.append(f"{word}: single-row P {p_rows[0]} is not (0...0, 1)")
            elif any(letter != 0 for letter in p_rows[0]) or p_rows[1] != (1,):
                failures.append(f"{word}: P rows {p_rows} are not (0...0 / 1)")
            if rs_inverse(pair.p, q) != word:
                failures.append(f"{word}: inverse RS does not recover the word")
        return failures


class RSInverseCheck(BaseCheck):
    name = "rs_inverse"
    display_name = "RS bijection on all binary words"
    description = "P and Q share a shape; inverse RS recovers every word of length N"

    def sizes(self, n_max: int) -> List[Optional[int]]:
        return list(range(1, min(n_max, ALL_WORDS_LIMIT) + 1))

    def check(self, n: Optional[int]) -> List[str]:
        failures = []
        seen = set()
        for value in range(2**n):
            word = tuple((value >> (n - 1 - i)) & 1 for i in range(n))
            pair = rs_insert_word(word, keep_trace=True)
            if any(step.p.shape != step.q.shape for step in pair.trace):
                failures.append(f"{word}: P and Q shapes diverge during insertion")
            if rs_inverse(pair.p, pair.q) != word:
                failures.append(f"{word}: inverse RS does not recover the word")
            seen.add((pair.p, pair.q))
        if len(seen) != 2**n:
            failures.append(f"{len(seen)} distinct pairs for {2**n} words")
        return failures


class OrthonormalityCheck(BaseCheck):
    name = "orthonormality"
    display_name = "Orthonormal Schur-Weyl basis"
    description = "Gram matrix is the identity; the N vectors have rank N"

    def check(self, n: Optional[int]) -> List[str]:
        failures = []
        gram = gram_matrix(n)
        deviation = float(np.max(np.abs(gram - np.eye(n))))
        if deviation > DENSITY_TOLERANCE:
            failures.append(f"Gram matrix deviates from identity by {deviation:.3e}")
        vectors = np.stack([s.amplitudes for s in build_basis(n)])
        if np.linalg.matrix_rank(vectors) != n:
            failures.append("basis vectors are not of full rank")
        return failures


class DensityOracleCheck(BaseCheck):
    name = "density_oracle"
    display_name = "Reduced densities: fast path vs partial trace"
    description = "Entrywise agreement, slot-swap symmetry, single-qubit marginals"

    def sizes(self, n_max: int) -> List[Optional[int]]:
        return list(range(2, min(n_max, self.cap) + 1))

    def check(self, n: Optional[int]) -> List[str]:
        failures = []
        for state in build_basis(n):
            full = embed_full(state, cap=self.cap)
            for j, k in all_pairs(n):
                fast = reduced_density_fast(state, j, k)
                oracle = reduced_density_oracle(full, j, k, cap=self.cap)
                gap = float(np.max(np.abs(fast.matrix - oracle.matrix)))
                if gap > DENSITY_TOLERANCE:
                    failures.append(f"{state.describe()} ({j},{k}): fast vs oracle {gap:.3e}")
                flipped = reduced_density_fast(state, k, j)
                if np.max(np.abs(flipped.matrix - fast.swapped().matrix)) > DENSITY_TOLERANCE:
                    failures.append(f"{state.describe()} ({j},{k}): slot swap mismatch")
                if np.any(fast.matrix[3, :] != 0) or np.any(fast.matrix[:, 3] != 0):
                    failures.append(f"{state.describe()} ({j},{k}): 11 row/column not zero")
                for slot in (0, 1):
                    diff = single_qubit_marginal(fast, slot) - single_qubit_marginal(oracle, slot)
                    if np.max(np.abs(diff)) > DENSITY_TOLERANCE:
                        failures.append(f"{state.describe()} ({j},{k}): marginal {slot} mismatch")
        return failures


class ConcurrencePathsCheck(BaseCheck):
    name = "concurrence_paths"
    display_name = "Concurrence: closed form vs numeric vs oracle"
    description = "Three-way agreement and the product rule C = 2|a_j a_k|"

    def check(self, n: Optional[int]) -> List[str]:
        failures = []
        for state in build_basis(n):
            for j, k in all_pairs(n):
                rho = reduced_density_fast(state, j, k)
                closed = concurrence_closed_form(n, state.label, j, k)
                numeric = concurrence_numeric(rho).value
                oracle = concurrence_oracle(rho).value
                product = 2 * abs(state.amplitude(j) * state.amplitude(k))
                spread = max(closed, numeric, oracle, product) - min(closed, numeric, oracle, product)
                if spread > CONCURRENCE_TOLERANCE:
                    failures.append(
                        f"{state.describe()} ({j},{k}): closed {closed!r}, numeric {numeric!r}, "
                        f"oracle {oracle!r}, product rule {product!r}"
                    )
        c2 = [concurrence_closed_form(n, hook_tableau(n, s), 1, s) for s in range(2, n + 1)]
        c1 = [concurrence_closed_form(n, hook_tableau(n, s), 1, 2) for s in range(3, n + 1)]
        for name, values in (("C2", c2), ("C1", c1)):
            if any(a <= b for a, b in zip(values, values[1:])):
                failures.append(f"{name} is not strictly decreasing in s: {values}")
        return failures


class GraphStructureCheck(BaseCheck):
    name = "graph_structure"
    display_name = "Entangled graph structure"
    description = "Closed form = numeric graphs, edge counts, isolated set, automorphisms"

    def check(self, n: Optional[int]) -> List[str]:
        failures = []
        for label in one_magnon_tableaux(n):
            closed = build_graph(n, label, GraphMode.CLOSED_FORM)
            numeric = build_graph(n, label, GraphMode.NUMERIC)
            name = label.inline()
            if not graph_equal(closed, numeric, CONCURRENCE_TOLERANCE):
                failures.append(f"{name}: closed-form and numeric graphs differ")
            s = label.second_row_entry
            if s is None:
                if len(closed.edges) != n * (n - 1) // 2 or closed.isolated_vertices():
                    failures.append(f"{name}: row label is not the complete graph")
                continue
            special = [e for e in closed.edges if e.edge_class is EdgeClass.C2]
            if len(closed.edges) != s * (s - 1) // 2 or len(special) != s - 1:
                failures.append(f"{name}: {len(closed.edges)} edges, {len(special)} special")
            if closed.isolated_vertices() != list(range(s + 1, n + 1)):
                failures.append(f"{name}: isolated set {closed.isolated_vertices()}")
            # adjacent transpositions generate every permutation of 1..s-1
            for v in range(1, s - 1):
                if closed.relabeled({v: v + 1, v + 1: v}) != closed:
                    failures.append(f"{name}: swapping {v} and {v + 1} is not an automorphism")
        return failures


class RandomRobustnessCheck(BaseCheck):
    name = "random_robustness"
    display_name = "Randomized concurrence robustness"
    description = "Random PSD inputs: eigenvalue paths agree; local-unitary invariance"

    def sizes(self, n_max: int) -> List[Optional[int]]:
        return [None]

    def check(self, n: Optional[int]) -> List[str]:
        failures = []
        rng = np.random.default_rng(self.settings.get("seed", 20240501))
        for sample in range(RANDOM_SAMPLES):
            rho = random_density(rng)
            numeric = concurrence_numeric(rho).value
            oracle = concurrence_oracle(rho).value
            if abs(numeric - oracle) > CONCURRENCE_TOLERANCE:
                failures.append(f"sample {sample}: numeric {numeric!r} vs oracle {oracle!r}")
            rotated = apply_local_unitaries(rho, random_unitary(rng), random_unitary(rng))
            moved = concurrence_numeric(rotated).value
            if abs(moved - numeric) > CONCURRENCE_TOLERANCE:
                failures.append(f"sample {sample}: local unitaries changed {numeric!r} to {moved!r}")
        return failures
