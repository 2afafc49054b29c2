"""Exception hierarchy shared across the package."""


class GraphError(ValueError):
    """Base class for malformed graph input."""


class LoopEdgeError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class NonPositiveWeightError(GraphError):
    pass


class ArityMismatchError(GraphError):
    """Weight or label vector length does not match the vertex count."""


class VertexRangeError(GraphError, IndexError):
    pass


class ParseError(GraphError):
    """Weighted-DIMACS syntax error, carrying a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class SizeGuardError(RuntimeError):
    """An exhaustive method was asked to run beyond its configured size."""


class InapplicableError(ValueError):
    """A bound's structural precondition does not hold for this graph."""


class TheoremViolation(AssertionError):
    """An exact computation contradicted a proven statement.

    ``dump`` carries a replayable description (graph text plus witnesses).
    """

    def __init__(self, message: str, dump: str = ""):
        self.dump = dump
        super().__init__(message if not dump else f"{message}\n{dump}")
