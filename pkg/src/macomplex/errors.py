"""Exception types shared across the package."""


class MacError(Exception):
    """Base class for all errors raised by this package."""


class InputError(MacError):
    """Malformed or out-of-range input."""


class GhostVertexError(MacError):
    """A vertex of the ambient set carries no face of the complex."""

    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(
            f"vertex {vertex} is not a face of the complex; remove absent "
            "vertices before computing minimal non-faces"
        )


class NotApplicableError(MacError):
    """An operation was invoked on the branch of the dichotomy it does not cover."""


class ResourceError(MacError):
    """A configured size limit would be exceeded."""
