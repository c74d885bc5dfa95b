"""Exception types shared across the library."""


class InvalidVertexError(ValueError):
    """Vertex is not in the category's vertex set."""


class EmptyWindowError(ValueError):
    """Window box is malformed or contains no vertices."""


class WindowTooSmallError(ValueError):
    """Window cannot accommodate the check's required interior or margin."""


class NotSemisimpleCategoryError(ValueError):
    """Transpose-style check requested for a category with doubled arrows."""


class NoKnownMapError(ValueError):
    """No explicit isomorphism is catalogued for the requested pair."""
