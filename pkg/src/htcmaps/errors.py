"""Exception types raised across the package."""


class HTCMapError(Exception):
    """Base class for every error raised by htcmaps."""


class GraphError(HTCMapError, ValueError):
    pass


class LoopEdge(GraphError):
    pass


class Disconnected(GraphError):
    pass


class DuplicateEdgeId(GraphError):
    pass


class IncompatiblePath(GraphError):
    pass


class MapError(HTCMapError, ValueError):
    pass


class NotAPermutation(MapError):
    pass


class EndpointMismatch(MapError):
    def __init__(self, edge, message=None):
        self.edge = edge
        super().__init__(message or f"image of E{edge} has the wrong endpoints")


class UnreducedImage(MapError):
    pass


class GenerationExhausted(MapError):
    pass


class DimensionMismatch(HTCMapError, ValueError):
    pass


class WalkNotFound(HTCMapError):
    pass


class EnumerationCapExceeded(HTCMapError):
    pass


class NotPeriodic(HTCMapError, ValueError):
    pass


class MapSyntaxError(HTCMapError):
    def __init__(self, message, line, col):
        self.line = line
        self.col = col
        super().__init__(f"line {line}, col {col}: {message}")


class UnknownEdge(MapError):
    def __init__(self, name, line, col):
        self.name = name
        self.line = line
        self.col = col
        super().__init__(f"line {line}, col {col}: unknown edge {name}")


class MissingImage(MapError):
    pass
