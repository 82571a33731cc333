"""Tests for the Jacobi eigensolver and the three concurrence paths.

Run:
  python -m magnons.concurrence.test
"""

from fractions import Fraction

import numpy as np

from magnons.density import TwoQubitDensity, all_pairs, reduced_density_fast
from magnons.errors import InvalidPairError, MagnonError, NumericalInstabilityError
from magnons.states import build_basis, build_state
from magnons.tableaux import hook_tableau, one_magnon_tableaux, row_tableau
from magnons.tests.utils import assert_close, expect_error, seeded_rng


def _werner(p: float) -> np.ndarray:
    singlet = np.array([0, 1, -1, 0]) / np.sqrt(2)
    return p * np.outer(singlet, singlet) + (1 - p) * np.eye(4) / 4


def test_jacobi_eigh() -> None:
    from .linalg import _off_norm, hermitian_sqrt, jacobi_eigh

    rng = seeded_rng()
    for _ in range(20):
        g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        h = g + g.conj().T
        w, v = jacobi_eigh(h)
        assert_close(w, np.linalg.eigvalsh(h), atol=1e-10)
        assert_close(v.conj().T @ v, np.eye(4), atol=1e-10)
        assert_close(h @ v, v * w, atol=1e-10)

        psd = g @ g.conj().T
        root = hermitian_sqrt(psd)
        assert_close(root @ root, psd, atol=1e-10)

    w, _ = jacobi_eigh(np.diag([3.0, 1.0, 2.0, 0.0]))
    assert list(w) == [0.0, 1.0, 2.0, 3.0]
    assert _off_norm(np.diag([0.7, 0.2, 0.1, 0.0])) == 0.0
    nearly = np.diag([0.7, 0.2, 0.1, 1e-6]).astype(complex)
    nearly[0, 1], nearly[1, 0] = 1e-9j, -1e-9j
    w, _ = jacobi_eigh(nearly)
    assert_close(w, np.linalg.eigvalsh(nearly), atol=1e-15)
    expect_error(NumericalInstabilityError, hermitian_sqrt, np.diag([1.0, -1.0]))
    print("✅ Jacobi eigensolver OK")


def test_reference_states() -> None:
    from .wootters import concurrence_numeric, concurrence_oracle

    bell = TwoQubitDensity.from_pure([0, 1 / np.sqrt(2), 1 / np.sqrt(2), 0])
    product = TwoQubitDensity.from_pure([1, 0, 0, 0])
    for path in (concurrence_numeric, concurrence_oracle):
        assert abs(path(bell).value - 1.0) < 1e-12
        assert path(product).value == 0.0

    assert abs(concurrence_numeric(_werner(0.8)).value - 0.7) < 1e-12
    assert concurrence_numeric(_werner(0.2)).value == 0.0
    assert concurrence_numeric(np.eye(4) / 4).value == 0.0
    print("✅ Bell, product and Werner states OK")


def test_closed_forms() -> None:
    from .wootters import concurrence_closed_form, concurrence_fraction

    label = hook_tableau(5, 4)
    assert concurrence_fraction(5, label, 1, 2) == Fraction(1, 6)
    assert concurrence_fraction(5, label, 2, 4) == Fraction(1, 2)
    assert concurrence_fraction(5, label, 4, 5) == 0
    assert concurrence_fraction(5, row_tableau(5), 2, 3) == Fraction(2, 5)
    assert concurrence_fraction(2, hook_tableau(2, 2), 1, 2) == 1
    assert concurrence_fraction(2, row_tableau(2), 1, 2) == 1
    assert concurrence_closed_form(5, hook_tableau(5, 3), 1, 2) == 1 / 3
    assert concurrence_fraction(5, hook_tableau(5, 3), 1, 5) == 0
    c1 = [concurrence_fraction(9, hook_tableau(9, s), 1, 2) for s in range(3, 10)]
    c2 = [concurrence_fraction(9, hook_tableau(9, s), 1, s) for s in range(2, 10)]
    assert all(a > b for a, b in zip(c1, c1[1:])) and all(a > b for a, b in zip(c2, c2[1:]))
    expect_error(InvalidPairError, concurrence_fraction, 5, label, 3, 2)
    expect_error(InvalidPairError, concurrence_fraction, 5, label, 1, 6)

    # product rule: C = 2 |a_j a_k|
    for state in build_basis(7):
        for j, k in all_pairs(7):
            closed = concurrence_closed_form(7, state.label, j, k)
            assert abs(closed - 2 * abs(state.amplitude(j) * state.amplitude(k))) < 1e-12
    print("✅ closed forms OK")


def test_three_paths_agree() -> None:
    from .wootters import concurrence_closed_form, concurrence_numeric, concurrence_oracle

    for n in range(2, 13):
        for label in one_magnon_tableaux(n):
            state = build_state(n, label)
            for j, k in all_pairs(n):
                rho = reduced_density_fast(state, j, k)
                closed = concurrence_closed_form(n, label, j, k)
                numeric = concurrence_numeric(rho)
                oracle = concurrence_oracle(rho)
                assert abs(numeric.value - closed) < 1e-9, (label, j, k, numeric)
                assert abs(oracle.value - closed) < 1e-9, (label, j, k, oracle)
                assert numeric.pair == (j, k)
    print("✅ closed form, numeric and oracle agree for N ≤ 12")


def test_oracle_repeated_roots() -> None:
    from .wootters import _solve_real_roots, concurrence_numeric, concurrence_oracle

    assert_close(_solve_real_roots(np.poly([0.1, 0.1, 0.1, 0.5])), [0.1, 0.1, 0.1, 0.5])
    assert_close(_solve_real_roots(np.poly([0.2, 0.2005])), [0.2, 0.2005])
    assert_close(_solve_real_roots(np.poly([1 / 16] * 4)), [1 / 16] * 4)

    # Werner states: one simple root and a triple root of rho*rho~
    for p in (0.0, 0.2, 1 / 3, 0.34, 0.5, 0.8, 1.0):
        exact = max((3 * p - 1) / 2, 0.0)
        assert abs(concurrence_oracle(_werner(p)).value - exact) < 1e-9, p
        assert abs(concurrence_numeric(_werner(p)).value - exact) < 1e-9, p
    print("✅ oracle handles repeated roots")


def test_random_robustness() -> None:
    from .sampling import apply_local_unitaries, random_density, random_unitary
    from .wootters import concurrence_numeric, concurrence_oracle

    rng = seeded_rng()
    for _ in range(100):
        rho = random_density(rng)
        numeric = concurrence_numeric(rho).value
        assert abs(numeric - concurrence_oracle(rho).value) < 1e-9
        rotated = apply_local_unitaries(rho, random_unitary(rng), random_unitary(rng))
        assert abs(concurrence_numeric(rotated).value - numeric) < 1e-9
    print("✅ random robustness OK")


def test_result_validation() -> None:
    from .wootters import ConcurrenceResult, characteristic_polynomial, spin_flip

    ok = ConcurrenceResult(value=0.5, sqrt_eigs=(0.5, 0.0, 0.0, 0.0), pair=(1, 2))
    assert ok.to_dict() == {"pair": [1, 2], "value": 0.5, "sqrt_eigs": [0.5, 0.0, 0.0, 0.0]}
    expect_error(MagnonError, ConcurrenceResult, 0.5, (0.1, 0.2, 0.0, 0.0))
    expect_error(MagnonError, ConcurrenceResult, 0.9, (0.5, 0.0, 0.0, 0.0))

    assert_close(characteristic_polynomial(np.diag([1.0, 2.0])), [1.0, -3.0, 2.0])
    assert_close(spin_flip(np.diag([1.0, 0.0, 0.0, 0.0])), np.diag([0.0, 0.0, 0.0, 1.0]))
    phi_plus = np.array([1, 0, 0, 1]) / np.sqrt(2)
    bell = np.outer(phi_plus, phi_plus)
    assert_close(spin_flip(bell), bell)
    print("✅ result validation OK")


def main() -> None:
    print("\n=== Concurrence Tests ===")
    test_jacobi_eigh()
    test_reference_states()
    test_closed_forms()
    test_three_paths_agree()
    test_oracle_repeated_roots()
    test_random_robustness()
    test_result_validation()
    print("\n✅ All concurrence tests passed.")


if __name__ == "__main__":
    main()
