"""Tests for partitions, tableaux and the counting identities.

Run:
  python -m magnons.tableaux.test
"""

from magnons.errors import InvalidInputError, InvalidSizeError, OutOfScopeError, TableauValidationError
from magnons.tests.utils import expect_error


def test_partition_basics() -> None:
    from .partitions import Partition, two_row_partitions

    hook = Partition((4, 1))
    assert str(hook) == "(4,1)"
    assert hook.n == 5 and hook.num_rows == 2
    assert hook.conjugate() == Partition((2, 1, 1, 1))
    assert Partition((5,)).dominates(hook)
    assert not hook.dominates(Partition((5,)))
    assert Partition((3, 2)).dominates(Partition((3, 2)))
    assert two_row_partitions(5) == [Partition((5,)), Partition((4, 1)), Partition((3, 2))]
    expect_error(InvalidInputError, Partition, (1, 2))
    expect_error(InvalidInputError, Partition, (3, 0))
    expect_error(InvalidInputError, hook.dominates, Partition((3,)))
    print("✅ partitions OK")


def test_one_magnon_labels() -> None:
    from .counting import hook_tableau, one_magnon_tableaux, row_tableau

    labels = one_magnon_tableaux(5)
    assert [t.inline() for t in labels] == [
        "(12345)",
        "(1345/2)",
        "(1245/3)",
        "(1235/4)",
        "(1234/5)",
    ]
    assert labels[0] == row_tableau(5)
    assert labels[3] == hook_tableau(5, 4)
    assert labels[3].second_row_entry == 4
    assert labels[0].second_row_entry is None
    assert labels[3].render() == "1235\n4"
    assert len(one_magnon_tableaux(2)) == 2
    assert one_magnon_tableaux(7) == [row_tableau(7)] + [hook_tableau(7, s) for s in range(2, 8)]
    assert row_tableau(10).inline() == "(1 2 3 4 5 6 7 8 9 10)"
    expect_error(InvalidSizeError, one_magnon_tableaux, 1)
    expect_error(InvalidInputError, hook_tableau, 5, 1)
    print("✅ one-magnon labels OK")


def test_tableau_validation() -> None:
    from .tableau import StandardYoungTableau, WeylTableau

    valid = StandardYoungTableau.from_rows([[1, 3], [2, 4]])
    assert valid.shape.parts == (2, 2)
    assert StandardYoungTableau.from_dict(valid.to_dict()) == valid
    expect_error(TableauValidationError, StandardYoungTableau.from_rows, [[2, 1]])
    expect_error(TableauValidationError, StandardYoungTableau.from_rows, [[2, 3], [1]])
    expect_error(TableauValidationError, StandardYoungTableau.from_rows, [[1, 2], [2]])
    expect_error(InvalidInputError, StandardYoungTableau.from_rows, [[1], [2, 3]])

    weyl = WeylTableau.from_rows([[0, 0, 0, 0], [1]])
    assert weyl.content() == {0: 4, 1: 1}
    assert weyl.inline() == "(0000/1)"
    expect_error(TableauValidationError, WeylTableau.from_rows, [[0, 1], [0]])
    assert StandardYoungTableau.from_rows([]).inline() == "∅"
    print("✅ tableau validation OK")


def test_syt_counts() -> None:
    from .counting import count_syt_two_row, enumerate_syt, hook_length_count
    from .partitions import Partition

    assert sum(1 for _ in enumerate_syt(Partition((3, 2)))) == 5
    assert hook_length_count(Partition((4, 1))) == 4
    assert count_syt_two_row(Partition((5, 5))) == 42
    for n in range(2, 10):
        assert count_syt_two_row(Partition((n - 1, 1))) == n - 1
    assert hook_length_count(Partition((3, 2, 1))) == 16
    expect_error(OutOfScopeError, count_syt_two_row, Partition((3, 2, 1)))
    print("✅ SYT counts OK")


def test_kostka_and_sectors() -> None:
    from .counting import (
        enumerate_weyl_tableaux,
        kostka_two_letter,
        sector_dimension,
        transitive_decomposition,
    )
    from .partitions import Partition

    assert kostka_two_letter(Partition((3, 2)), (3, 2)) == 1
    assert kostka_two_letter(Partition((4, 1)), (3, 2)) == 1
    assert kostka_two_letter(Partition((5,)), (3, 2)) == 1
    assert kostka_two_letter(Partition((3, 2)), (4, 1)) == 0
    (only,) = enumerate_weyl_tableaux(Partition((4, 1)), (4, 1))
    assert only.inline() == "(0000/1)"

    assert transitive_decomposition(5, 1) == {Partition((5,)): 1, Partition((4, 1)): 1}
    assert transitive_decomposition(4, 2) == {
        Partition((4,)): 1,
        Partition((3, 1)): 1,
        Partition((2, 2)): 1,
    }
    assert transitive_decomposition(4, 3) == transitive_decomposition(4, 1)
    assert sector_dimension(10, 3) == 120
    assert sum(sector_dimension(8, r) for r in range(9)) == 2**8
    expect_error(InvalidInputError, sector_dimension, 3, 4)
    print("✅ Kostka numbers and sectors OK")


def main() -> None:
    print("\n=== Tableaux Tests ===")
    test_partition_basics()
    test_one_magnon_labels()
    test_tableau_validation()
    test_syt_counts()
    test_kostka_and_sectors()
    print("\n✅ All tableaux tests passed.")


if __name__ == "__main__":
    main()
