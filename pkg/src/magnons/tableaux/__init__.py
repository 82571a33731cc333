"""Partitions, Young tableaux and the counting identities of the one-magnon basis."""

from magnons.tableaux.counting import (
    count_syt_two_row,
    enumerate_syt,
    enumerate_weyl_tableaux,
    hook_length_count,
    hook_tableau,
    kostka_two_letter,
    one_magnon_tableaux,
    row_tableau,
    sector_dimension,
    transitive_decomposition,
)
from magnons.tableaux.partitions import Partition, two_row_partition, two_row_partitions
from magnons.tableaux.tableau import StandardYoungTableau, WeylTableau

__all__ = [
    "Partition",
    "StandardYoungTableau",
    "WeylTableau",
    "count_syt_two_row",
    "enumerate_syt",
    "enumerate_weyl_tableaux",
    "hook_length_count",
    "hook_tableau",
    "kostka_two_letter",
    "one_magnon_tableaux",
    "row_tableau",
    "sector_dimension",
    "transitive_decomposition",
    "two_row_partition",
    "two_row_partitions",
]
