"""Exception hierarchy shared by every magnons sub-package.

Input problems subclass `ValueError`, numerical failures subclass
`ArithmeticError`, so callers may catch either the builtin family or
`MagnonError` as a whole.
"""


class MagnonError(Exception):
    """Base class for all errors raised by the magnons package."""


class InvalidSizeError(MagnonError, ValueError):
    """System size N is below the smallest supported ring."""


class OutOfScopeError(MagnonError, ValueError):
    """Request falls outside the two-row / one-magnon sector handled here."""


class InvalidInputError(MagnonError, ValueError):
    """Generic malformed argument (range, box count, alphabet)."""


class InvalidLabelError(InvalidInputError):
    """Tableau is not a one-magnon Schur-Weyl label for the given N."""


class InvalidPairError(InvalidInputError):
    """Qubit pair (j, k) is not 1 <= j < k <= N."""


class TableauValidationError(MagnonError, ValueError):
    """Rows or columns of a tableau break the required monotonicity."""


class ResourceLimitError(MagnonError, ValueError):
    """Full-tensor oracle requested above the configured brute-force cap."""


class ParseError(MagnonError, ValueError):
    """Command-line word or selector could not be parsed."""


class NumericalInstabilityError(MagnonError, ArithmeticError):
    """Matrix expected to be PSD has an eigenvalue below tolerance."""


class RootFindingError(MagnonError, ArithmeticError):
    """Characteristic-polynomial root failed its residual check."""
