"""Tests for Schensted insertion, its inverse and the one-magnon classification.

Run:
  python -m magnons.rs.test
"""

from itertools import product

from magnons.errors import InvalidInputError, InvalidSizeError, ParseError
from magnons.tests.utils import expect_error


def test_worked_example_trace() -> None:
    from .insertion import parse_word, rs_insert_word

    pair = rs_insert_word(parse_word("00100"), keep_trace=True)
    assert pair.format_trace().splitlines() == [
        "step 1: insert 0 → P = (0), Q = (1)",
        "step 2: insert 0 → P = (00), Q = (12)",
        "step 3: insert 1 → P = (001), Q = (123)",
        "step 4: insert 0 → P = (000/1), Q = (123/4)",
        "step 5: insert 0 → P = (0000/1), Q = (1235/4)",
        "RS(00100) = ((0000/1), (1235/4))",
    ]
    data = pair.to_dict()
    assert data["word"] == "00100"
    assert data["q"] == {"shape": [4, 1], "rows": [[1, 2, 3, 5], [4]]}
    assert len(data["steps"]) == 5
    print("✅ 00100 trace OK")


def test_small_words() -> None:
    from .insertion import parse_word, rs_insert_word

    empty = rs_insert_word(parse_word(""), keep_trace=True)
    assert empty.format_trace() == "RS() = (∅, ∅)"
    assert empty.shape.parts == ()

    pair = rs_insert_word(parse_word("01010"))
    assert pair.shape.parts == (3, 2)
    assert pair.p.inline() == "(000/11)"
    assert pair.q.inline() == "(124/35)"
    assert pair.trace == ()

    # letters from any totally ordered alphabet
    assert rs_insert_word((3, 1, 2)).q.inline() == "(13/2)"
    expect_error(ParseError, parse_word, "0120")
    print("✅ small words OK")


def test_inverse_recovers_every_word() -> None:
    from magnons.tableaux import StandardYoungTableau, WeylTableau

    from .insertion import rs_insert_word, rs_inverse

    for n in range(0, 8):
        pairs = set()
        for word in product((0, 1), repeat=n):
            pair = rs_insert_word(word)
            assert pair.p.shape == pair.q.shape
            assert rs_inverse(pair.p, pair.q) == word
            pairs.add((pair.p, pair.q))
        assert len(pairs) == 2**n

    expect_error(
        InvalidInputError,
        rs_inverse,
        WeylTableau.from_rows([[0, 0]]),
        StandardYoungTableau.from_rows([[1], [2]]),
    )
    print("✅ inverse RS OK")


def test_one_magnon_classification() -> None:
    from magnons.tableaux import hook_tableau, one_magnon_tableaux, row_tableau

    from .classification import (
        classify_all_configurations,
        configuration_word,
        expected_recording_tableau,
        rs_one_magnon,
        two_line_notation,
    )

    assert configuration_word(5, 3) == (0, 0, 1, 0, 0)
    assert rs_one_magnon(5, 3).q == hook_tableau(5, 4)
    assert rs_one_magnon(5, 5).q == row_tableau(5)
    assert expected_recording_tableau(2, 1) == hook_tableau(2, 2)

    for n in range(2, 13):
        classification = classify_all_configurations(n, max_workers=2)
        assert len(classification) == n
        assert set(classification.values()) == set(one_magnon_tableaux(n))
        for word, q in classification.items():
            j = word.index(1) + 1
            assert q == expected_recording_tableau(n, j)

    assert two_line_notation((0, 0, 1, 0, 0)) == "12345\n00100"
    assert two_line_notation(configuration_word(10, 10)).splitlines()[0].endswith("9 10")
    expect_error(InvalidInputError, configuration_word, 4, 5)
    expect_error(InvalidSizeError, classify_all_configurations, 1)
    print("✅ one-magnon classification OK")


def main() -> None:
    print("\n=== RS Tests ===")
    test_worked_example_trace()
    test_small_words()
    test_inverse_recovers_every_word()
    test_one_magnon_classification()
    print("\n✅ All RS tests passed.")


if __name__ == "__main__":
    main()
