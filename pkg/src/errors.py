"""
Exception hierarchy for the GMCC toolkit.

Library code raises these; only the command-line layer turns them into
exit codes (see ``EXIT_CODES``).
"""

from typing import Dict, Type


class GmccError(Exception):
    """Base class for every error raised by this package."""


class FieldConstructionError(GmccError, ValueError):
    """A finite field could not be built (non-prime characteristic, size cap)."""


class FieldArithmeticError(GmccError, ArithmeticError):
    """Invalid field operation: inverse of zero, mixed fields, conj outside GF(q^2)."""


class ParameterError(GmccError, ValueError):
    """A precondition of an operation was violated."""


class InstanceTooLargeError(ParameterError):
    """An exhaustive enumeration would exceed its codeword cap."""


class InvariantViolation(GmccError, RuntimeError):
    """A guaranteed mathematical property failed to hold. Indicates a bug."""


class TableMismatchError(GmccError):
    """Reproduced tables differ from the bundled golden files."""


class UsageError(GmccError):
    """Malformed command line."""


EXIT_CODES: Dict[Type[GmccError], int] = {
    UsageError: 1,
    FieldConstructionError: 1,
    FieldArithmeticError: 1,
    ParameterError: 1,
    InvariantViolation: 2,
    TableMismatchError: 3,
}


def exit_code_for(error: GmccError) -> int:
    """Exit code for an error, walking its MRO so subclasses inherit their parent's code."""
    for cls in type(error).__mro__:
        if cls in EXIT_CODES:
            return EXIT_CODES[cls]
    return 1
