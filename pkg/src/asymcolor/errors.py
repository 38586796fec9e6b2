"""Exception types shared across the package."""


class AsymcolorError(Exception):
    """Base class for all package errors."""


class GraphValidationError(AsymcolorError):
    """Raised when raw input does not describe a valid graph."""


class SelfLoopError(GraphValidationError):
    pass


class DuplicateEdgeError(GraphValidationError):
    pass


class DanglingEndpointError(GraphValidationError):
    pass


class DisconnectedError(GraphValidationError):
    pass


class VerticesNotDistinctError(AsymcolorError):
    """Raised when an operation requires pairwise distinct vertices."""


class SizeLimitExceededError(AsymcolorError):
    """Raised when a graph exceeds the configured vertex bound."""


class BudgetExceededError(AsymcolorError):
    """Raised when an enumeration would exceed its configured budget."""


class NonPlanarError(AsymcolorError):
    """Raised when an operation requires a planar graph.

    Carries the Kuratowski witness when one is available.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotThreeConnectedError(AsymcolorError):
    """Raised when an operation requires a 3-connected graph."""


class UnsupportedScopeError(AsymcolorError):
    """Raised when a query falls outside the supported classification scope."""


class OddEulerDefectError(AsymcolorError):
    """Raised when face tracing produces an impossible Euler characteristic.

    This always signals an internal bug, never bad user input.
    """


class SearchExhaustedError(AsymcolorError):
    """Raised when a bounded coloring search finds no certified coloring.

    This should be impossible on valid inputs; it signals a bug.
    """


class InternalVerificationFailureError(AsymcolorError):
    """Raised when a synthesized coloring fails its own verification."""


class BadParamsError(AsymcolorError):
    """Raised by graph generators on out-of-range parameters."""


class ParseError(AsymcolorError):
    """A positioned error in an input file."""

    def __init__(self, message, line=None, column=None):
        location = ""
        if line is not None:
            location = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + location)
        self.line = line
        self.column = column
