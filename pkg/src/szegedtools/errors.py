"""Exception types shared across the package.

Each class maps to one failure mode of the command line front end, so the
exit-code translation there stays a plain lookup.
"""


class SzegedError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidGraphError(SzegedError):
    """Malformed graph input: loops, duplicate edges, endpoints out of range."""


class FormatError(SzegedError):
    """Unparseable text input (graph6 or edge list).

    ``offset`` is the byte position of the first offending character when it
    is known, else ``None``.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class DisconnectedError(SzegedError):
    """Operation requires a connected graph."""


class InfeasibleError(SzegedError):
    """Requested parameters admit no graph of the requested shape."""


class CapError(SzegedError):
    """Requested size exceeds a hard cap of the exact algorithms."""
