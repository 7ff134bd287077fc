"""Exception hierarchy shared across the package."""


class LayoutError(Exception):
    """Base class for every error raised by arulayout."""


class OverlapError(LayoutError):
    pass


class CoverageError(LayoutError):
    pass


class DuplicateIdError(LayoutError):
    pass


class NongenericError(LayoutError):
    """Raised when an analysis needs a layout without crosses."""


class EmbeddingError(LayoutError):
    """The rotation system or outer face of a plane graph is inconsistent."""


class DisconnectedError(LayoutError):
    pass


class NotBiconnectedError(LayoutError):
    pass


class SizeLimitError(LayoutError):
    pass


class NotSliceableError(LayoutError):
    pass


class InvalidCycleError(LayoutError):
    pass


class CapExceeded(LayoutError):
    pass


class CapError(LayoutError):
    pass


class NotCutVertexError(LayoutError):
    pass


class CutVertexError(LayoutError):
    pass


class NotOuterError(LayoutError):
    pass


class MoreThanTwoComponents(LayoutError):
    """Removing a vertex left three or more components."""


class InvalidInputError(LayoutError):
    pass


class InternalVerificationError(LayoutError):
    """A layout built by the recognizer failed its final check."""
