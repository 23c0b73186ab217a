"""Exception hierarchy shared by every hypershadow module."""


class HypershadowError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(HypershadowError, ValueError):
    """Structural input that violates a hypergraph or multigraph invariant."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NonUniformEdge(ValidationError):
    pass


class RepeatedVertexInEdge(ValidationError):
    pass


class EmptyEdgeList(ValidationError):
    pass


class InvalidPartition(ValidationError):
    pass


class InfeasibleParameters(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class OutOfRange(ValidationError):
    pass


class NonPositiveValue(ValidationError):
    pass


class VertexSetMismatch(ValidationError):
    pass


class NotIndependent(ValidationError):
    pass


class ParseError(HypershadowError, ValueError):
    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DisconnectedInput(HypershadowError, ValueError):
    pass


class NoConvergence(HypershadowError, RuntimeError):
    """Iteration budget exhausted; ``bracket`` holds the last (lower, upper) bounds."""

    def __init__(self, message, bracket=None, iterations=None):
        super().__init__(message)
        self.bracket = bracket
        self.iterations = iterations
