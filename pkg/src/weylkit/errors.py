"""Exception hierarchy shared by all modules."""


class WeylkitError(Exception):
    """Base class for all package errors."""


class InputError(WeylkitError):
    """Malformed or mismatched input (wrong group, bad scenario, bad matrix)."""


class PreconditionError(WeylkitError):
    """A documented operation precondition was violated by the caller."""


class UnsupportedOperationError(WeylkitError):
    """The operation is undefined for this input (e.g. halving in a non-2-regular group)."""


class DefectError(WeylkitError):
    """An internal guarantee failed; carries a witness.  Always a bug, never a data condition."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ResourceLimitError(WeylkitError):
    """A size cap (dimension, enumeration budget) was exceeded."""
