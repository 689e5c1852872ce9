"""Errors shared by more than one module."""


class CrossCheckMismatch(ArithmeticError):
    """Two independent computation routes disagree on a value they must share."""


class VerificationFailed(ArithmeticError):
    """A claimed algebraic identity failed an exact recomputation."""


class InternalError(AssertionError):
    """An internal consistency condition broke; indicates a bug, not bad input."""
