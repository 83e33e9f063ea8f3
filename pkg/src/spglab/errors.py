"""Domain error hierarchy.

Every error a caller can provoke has its own class so that CLI and HTTP
layers can report a stable name (the class name) alongside the message.
"""


class SpgError(Exception):
    """Base class for all domain errors."""


# -- construction -------------------------------------------------------------

class EmptyBlock(SpgError):
    pass


class OverlappingBlocks(SpgError):
    pass


class WrongCardinality(SpgError):
    pass


class UnknownSymbol(SpgError):
    pass


class DisconnectedGraph(SpgError):
    pass


class BadEdge(SpgError):
    pass


class InvalidApices(SpgError):
    pass


# -- structural operations -----------------------------------------------------

class DSetNotPresent(SpgError):
    pass


class NotASpindle(SpgError):
    pass


class NoSuchEdge(SpgError):
    pass


class EdgeExists(SpgError):
    pass


class SelfLoop(SpgError):
    pass


class InvalidClf(SpgError):
    pass


class NotAPath(SpgError):
    pass


class DisconnectedInput(SpgError):
    pass


# -- generators ----------------------------------------------------------------

class BadParameter(SpgError):
    pass


class NoHamiltonianPath(SpgError):
    pass


# -- oracle ---------------------------------------------------------------------

class BudgetExceeded(SpgError):
    pass


# -- strategy --------------------------------------------------------------------

class BudgetExhausted(SpgError):
    """Search ran out of moves.  Carries the partial trace."""

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


# -- document I/O -----------------------------------------------------------------

class DocumentSyntaxError(SpgError):
    pass


class ValidationError(SpgError):
    """A syntactically well-formed document violates a structural invariant."""

    def __init__(self, cause):
        super().__init__(f"{type(cause).__name__}: {cause}")
        self.cause = cause
