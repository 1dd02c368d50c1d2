"""Exception hierarchy shared across the package."""


class SwaplogicError(Exception):
    """Base class for all package errors."""


class InputError(SwaplogicError, ValueError):
    """Malformed or out-of-contract input."""


class MoveError(SwaplogicError):
    """A move was applied that is illegal in the current state."""


class ResourceLimitError(SwaplogicError):
    """An operation refused to run because it would exceed a configured cap."""


class ConstructionError(SwaplogicError):
    """A gadget or instance could not be assembled consistently."""


class ReductionDefectError(SwaplogicError):
    """Internal consistency failure while expanding a translated witness.

    Raised loudly: it indicates a transcription or wiring bug, never a
    property of the input.
    """
