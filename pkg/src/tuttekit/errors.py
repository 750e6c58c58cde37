"""Exception hierarchy for the package."""


class TutteKitError(Exception):
    """Base class for all package errors."""


class ParseError(TutteKitError):
    """Raised by the graph file codec on malformed input.

    Carries the 1-based line number when available.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NonPlanarError(TutteKitError):
    """Raised when an operation requires a planar graph and the input is not."""


class DegenerateGadgetError(TutteKitError):
    """Raised when a two-terminal gadget has no valid effective weight.

    This happens when the partition sum with the terminals separated
    vanishes, so no single replacement edge can reproduce the gadget.
    """


class BudgetExceededError(TutteKitError):
    """Raised when an exact evaluation exceeds its work budget."""


class WalkError(TutteKitError):
    """Raised when a weight-synthesis walk cannot reach its target."""


class PreconditionError(TutteKitError):
    """Raised when inputs violate a documented domain restriction."""
