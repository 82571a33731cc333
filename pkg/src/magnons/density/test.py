"""Tests for two-qubit reduced densities.

Run:
  python -m magnons.density.test
"""

import numpy as np

from magnons.errors import InvalidInputError, InvalidPairError, NumericalInstabilityError, ResourceLimitError
from magnons.states import build_basis, build_state, embed_full
from magnons.tableaux import hook_tableau, row_tableau
from magnons.tests.utils import assert_close, expect_error


def test_fast_path_entries() -> None:
    from .reduced import reduced_density_fast

    rho = reduced_density_fast(build_state(5, hook_tableau(5, 4)), 1, 4)
    expected = np.zeros((4, 4))
    expected[0, 0] = 1 / 6
    expected[1, 1] = 3 / 4
    expected[2, 2] = 1 / 12
    expected[1, 2] = expected[2, 1] = -1 / 4
    assert_close(rho.matrix, expected)
    assert rho.pair == (1, 4)
    assert_close(rho.entry("01", "10"), -1 / 4)
    assert rho.entry("11", "11") == 0

    # spectator pair of a hook: both nodes beyond the special one
    idle = reduced_density_fast(build_state(6, hook_tableau(6, 3)), 5, 6)
    assert_close(idle.matrix, np.diag([1.0, 0.0, 0.0, 0.0]))
    print("✅ fast path entries OK")


def test_fast_matches_oracle() -> None:
    from .reduced import all_pairs, reduced_density_fast, reduced_density_oracle

    for n in range(2, 13):
        for state in build_basis(n):
            full = embed_full(state, cap=n)
            for j, k in all_pairs(n):
                fast = reduced_density_fast(state, j, k)
                oracle = reduced_density_oracle(full, j, k, cap=n)
                assert_close(fast.matrix, oracle.matrix)
    print("✅ fast path equals partial trace for N ≤ 12")


def test_slot_order_and_marginals() -> None:
    from .reduced import reduced_density_fast, single_qubit_marginal

    state = build_state(5, hook_tableau(5, 5))
    forward = reduced_density_fast(state, 2, 5)
    backward = reduced_density_fast(state, 5, 2)
    assert_close(backward.matrix, forward.swapped().matrix)
    assert backward.pair == (5, 2)

    left = single_qubit_marginal(forward, 0)
    right = single_qubit_marginal(forward, 1)
    assert_close(left, np.diag([1 - 1 / 20, 1 / 20]))
    assert_close(right, np.diag([1 - 4 / 5, 4 / 5]))
    assert_close(single_qubit_marginal(backward, 0), right)
    expect_error(InvalidPairError, single_qubit_marginal, forward, 2)
    print("✅ slot order and marginals OK")


def test_density_validation() -> None:
    from .reduced import TwoQubitDensity, all_pairs, reduced_density_fast, reduced_density_oracle

    assert all_pairs(3) == [(1, 2), (1, 3), (2, 3)]
    state = build_state(4, row_tableau(4))
    expect_error(InvalidPairError, reduced_density_fast, state, 2, 2)
    expect_error(InvalidPairError, reduced_density_fast, state, 0, 2)
    expect_error(InvalidPairError, reduced_density_fast, state, 1, 5)
    expect_error(ResourceLimitError, reduced_density_oracle, embed_full(state, cap=4), 1, 2, cap=3)

    expect_error(InvalidInputError, TwoQubitDensity, (1, 2), np.eye(3) / 3)
    expect_error(NumericalInstabilityError, TwoQubitDensity, (1, 2), np.eye(4) / 2)
    expect_error(NumericalInstabilityError, TwoQubitDensity, (1, 2), np.diag([1.5, -0.5, 0, 0]))

    bell = TwoQubitDensity.from_pure([0, 1 / np.sqrt(2), 1 / np.sqrt(2), 0])
    data = bell.to_dict()
    assert data["pair"] == [1, 2]
    assert np.isclose(data["matrix"][1][2][0], 0.5) and data["matrix"][1][2][1] == 0.0
    print("✅ density validation OK")


def main() -> None:
    print("\n=== Density Tests ===")
    test_fast_path_entries()
    test_fast_matches_oracle()
    test_slot_order_and_marginals()
    test_density_validation()
    print("\n✅ All density tests passed.")


if __name__ == "__main__":
    main()
