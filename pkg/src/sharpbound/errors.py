"""Exception hierarchy shared by every module."""


class SharpBoundError(Exception):
    """Base class for all errors raised by this package."""


class NotSymmetric(SharpBoundError, ValueError):
    pass


class NoConvergence(SharpBoundError, ArithmeticError):
    pass


class NegativeEntry(SharpBoundError, ValueError):
    pass


class NonSquare(SharpBoundError, ValueError):
    pass


class InvariantViolation(SharpBoundError, ValueError):
    """A graph, digraph or matrix breaks one of its type invariants."""

    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class ParseError(SharpBoundError, ValueError):
    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class Disconnected(SharpBoundError, ValueError):
    pass


class NotStronglyConnected(SharpBoundError, ValueError):
    pass


class MissingExactRadius(SharpBoundError, ValueError):
    pass


class GenerationExhausted(SharpBoundError, RuntimeError):
    pass


class NotReproducible(SharpBoundError, RuntimeError):
    pass


class SizeTooLarge(SharpBoundError, ValueError):
    pass
