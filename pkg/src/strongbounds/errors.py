"""Exception types shared across the package."""


class StrongboundsError(Exception):
    """Base class for all library errors."""


class LoopArc(StrongboundsError):
    """An arc whose tail and head coincide (loops are not allowed)."""


class ParallelArc(StrongboundsError):
    """The same ordered arc given more than once."""


class VertexOutOfRange(StrongboundsError):
    """A vertex id outside 0..n-1."""


class NotStrong(StrongboundsError):
    """Operation requires a strongly connected digraph.

    Carries, when known, one unreachable ordered pair as ``pair``.
    """

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


class SizeOverflow(StrongboundsError):
    """A product-scale structure would exceed the configured vertex budget."""


class ParseError(StrongboundsError):
    """Malformed edge-list input. Carries the 1-based line number as ``line``."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class InvalidConfig(StrongboundsError):
    """A generator or verification configuration outside its allowed range."""


class UnknownSetName(StrongboundsError):
    """Requested boundary-type set name does not exist."""
