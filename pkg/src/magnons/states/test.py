"""Tests for exact amplitudes, basis states and the full-space embedding.

Run:
  python -m magnons.states.test
"""

import json
from fractions import Fraction

import numpy as np

from magnons.errors import InvalidLabelError, InvalidSizeError, MagnonError, ResourceLimitError
from magnons.tableaux import StandardYoungTableau, hook_tableau, one_magnon_tableaux, row_tableau
from magnons.tests.utils import assert_close, expect_error


def test_five_node_radicals() -> None:
    from .states import build_state

    rendered = {
        label.inline(): [a.render() for a in build_state(5, label).exact]
        for label in one_magnon_tableaux(5)
    }
    assert rendered == {
        "(12345)": ["√5/5"] * 5,
        "(1345/2)": ["−√2/2", "√2/2", "0", "0", "0"],
        "(1245/3)": ["−√6/6", "−√6/6", "√6/3", "0", "0"],
        "(1235/4)": ["−√3/6", "−√3/6", "−√3/6", "√3/2", "0"],
        "(1234/5)": ["−√5/10", "−√5/10", "−√5/10", "−√5/10", "2√5/5"],
    }
    print("✅ N=5 radicals OK")


def test_exact_amplitude() -> None:
    from .amplitudes import ExactAmplitude, amplitude, exact_amplitude

    half = ExactAmplitude(1, 2, 4)
    assert (half.p, half.q) == (1, 2)
    assert half.squared == Fraction(1, 2)
    assert ExactAmplitude.zero().render() == "0"
    assert exact_amplitude(6, hook_tableau(6, 3), 1) == ExactAmplitude(-1, 1, 6)
    assert exact_amplitude(6, hook_tableau(6, 3), 3).to_dict() == {
        "sign": 1,
        "p": 2,
        "q": 3,
        "float": np.sqrt(2 / 3),
    }
    assert amplitude(6, hook_tableau(6, 3), 6) == 0.0
    assert np.isclose(amplitude(6, row_tableau(6), 2), 1 / np.sqrt(6))

    wrong_shape = StandardYoungTableau.from_rows([[1, 2, 4], [3, 5]])
    expect_error(InvalidLabelError, exact_amplitude, 5, wrong_shape, 1)
    expect_error(InvalidLabelError, exact_amplitude, 6, hook_tableau(5, 3), 1)
    print("✅ exact amplitudes OK")


def test_state_rendering() -> None:
    from .states import OneMagnonState, build_state

    assert build_state(5, hook_tableau(5, 4)).render() == "√3/2 |4⟩ − √3/6 (|1⟩+|2⟩+|3⟩)"
    assert build_state(2, row_tableau(2)).render() == "√2/2 (|1⟩+|2⟩)"
    assert build_state(5, hook_tableau(5, 2)).render() == "√2/2 |2⟩ − √2/2 |1⟩"

    state = build_state(6, hook_tableau(6, 3))
    data = json.loads(state.to_json())
    assert data["n"] == 6 and data["label"]["rows"] == [[1, 2, 4, 5, 6], [3]]
    assert [a["float"] for a in data["amplitudes"]] == list(state.amplitudes)
    assert state.support == [1, 2, 3]

    generic = OneMagnonState.from_amplitudes([0.6, 0.0, 0.8])
    assert generic.render() == "0.8 |3⟩ + 0.6 |1⟩"
    assert generic.describe() == "psi(N=3)"
    expect_error(MagnonError, OneMagnonState.from_amplitudes, [0.6, 0.6])
    print("✅ state rendering OK")


def test_orthonormal_basis() -> None:
    from .states import build_basis, gram_matrix

    for n in range(2, 15):
        assert_close(gram_matrix(n), np.eye(n))
    vectors = np.stack([s.amplitudes for s in build_basis(7)])
    assert np.linalg.matrix_rank(vectors) == 7
    expect_error(InvalidSizeError, gram_matrix, 1)
    print("✅ orthonormal basis OK")


def test_full_embedding() -> None:
    from .states import FullStateVector, build_state, embed_full, node_index

    state = build_state(4, hook_tableau(4, 3))
    full = embed_full(state, cap=4)
    assert node_index(4, 1) == 8 and node_index(4, 4) == 1
    assert np.count_nonzero(full.entries) == 3
    assert_close(full.entries[node_index(4, 3)], state.amplitude(3))
    assert_close(full.as_tensor()[0, 0, 1, 0], state.amplitude(3))
    assert FullStateVector.product_zero(3).entries[0] == 1.0
    expect_error(ResourceLimitError, embed_full, state, cap=3)
    print("✅ full embedding OK")


def main() -> None:
    print("\n=== States Tests ===")
    test_five_node_radicals()
    test_exact_amplitude()
    test_state_rendering()
    test_orthonormal_basis()
    test_full_embedding()
    print("\n✅ All states tests passed.")


if __name__ == "__main__":
    main()
