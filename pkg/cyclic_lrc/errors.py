"""
Exceptions raised by the cyclic_lrc package.
"""


class LrcError(ValueError):
    """
    Base class for all errors raised by the package.
    """


class FieldError(LrcError):
    """
    Raised for invalid finite field parameters or illegal field operations.
    """


class FieldMismatchError(FieldError, TypeError):
    """
    Raised when operands belong to different fields.
    """


class ParameterError(LrcError):
    """
    Raised for out-of-range arguments to bound, search and locality functions.
    """


class RepairError(LrcError):
    """
    Raised when an erasure pattern cannot be repaired through the requested partition.
    """


class ZeroInverseError(FieldError, ZeroDivisionError):
    """
    Raised when the multiplicative inverse of zero is requested.
    """
