"""Robinson-Schensted correspondence between spin words and tableau pairs."""

from magnons.rs.classification import (
    classify_all_configurations,
    configuration_word,
    expected_recording_tableau,
    one_magnon_configurations,
    rs_one_magnon,
    two_line_notation,
)
from magnons.rs.insertion import (
    RSPair,
    RSStep,
    Word,
    format_word,
    parse_word,
    rs_insert_word,
    rs_inverse,
)

__all__ = [
    "RSPair",
    "RSStep",
    "Word",
    "classify_all_configurations",
    "configuration_word",
    "expected_recording_tableau",
    "format_word",
    "one_magnon_configurations",
    "parse_word",
    "rs_insert_word",
    "rs_inverse",
    "rs_one_magnon",
    "two_line_notation",
]
