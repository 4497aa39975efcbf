"""Exception types shared across the package.

The CLI maps each class to a distinct exit code, so keep the hierarchy flat
and the distinctions meaningful.
"""


class RwisError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(RwisError):
    """An instance file could not be parsed (malformed syntax)."""


class ValidationError(RwisError):
    """Well-formed input violates a structural invariant."""


class GuardError(RwisError):
    """An enumeration guard was exceeded; the operation refuses to run."""


class FrontierCapError(GuardError):
    """The Pareto frontier grew past the configured cap."""


class UnsupportedCombinationError(RwisError):
    """The requested problem/algorithm/uncertainty combination is not defined."""
