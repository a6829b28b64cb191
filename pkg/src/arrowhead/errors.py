"""Exception types shared across the package.

Everything raised on bad input or a broken contract derives from
ArrowheadError so the command line layer can map the whole family to a
single exit code.
"""


class ArrowheadError(Exception):
    """Base class for all input and contract errors raised by this package."""


class Graph6Error(ArrowheadError):
    """Malformed graph6 text. Carries the byte offset of the first bad byte."""

    def __init__(self, offset: int, message: str):
        self.offset = offset
        super().__init__(f"graph6 parse error at byte {offset}: {message}")


class OrderLimitError(ArrowheadError):
    """Graph order outside the supported range (0..62 vertices)."""


class PreconditionError(ArrowheadError):
    """An operation was called outside its stated hypotheses."""


class ColoringMismatchError(ArrowheadError):
    """Edge coloring does not match the host graph, or its JSON form is invalid."""


class CatalogError(ArrowheadError):
    """A catalog file is missing, unreadable, or holds graphs of the wrong order."""


class ConstructionError(ArrowheadError):
    """A coloring construction could not produce a certified result."""
