"""Exception types shared across the package."""


class PathIdealsError(Exception):
    """Base class for all errors raised by this package."""


class InputError(PathIdealsError):
    """Malformed or out-of-contract input (bad vertex id, non-edge, parse error)."""


class NoBroomVertexError(InputError):
    """The tree has no vertex of degree >= 2, so no broom vertex exists."""


class CapacityError(PathIdealsError):
    """The instance exceeds the configured exhaustive-enumeration cap."""
