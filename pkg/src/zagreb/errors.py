"""Exception hierarchy shared by every module of the package."""


class ZagrebError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(ZagrebError, ValueError):
    """Invalid graph construction."""


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class EmptyGraph(ZagrebError, ValueError):
    """An operation needs n >= 1 and/or m >= 1."""


class TooFewVertices(ZagrebError, ValueError):
    pass


class IsolatedVertex(ZagrebError, ValueError):
    pass


class IsolatedVertexWithNegativeLambda(IsolatedVertex):
    pass


class LambdaOutOfRange(ZagrebError, ValueError):
    pass


class ParameterOutOfRange(ZagrebError, ValueError):
    pass


class NTooLarge(ZagrebError, ValueError):
    pass


class FormatError(ZagrebError, ValueError):
    """Malformed serialized graph."""


class BadChecksumByte(FormatError):
    """A graph6 byte lies outside the printable range [63, 126]."""


class TruncatedBody(FormatError):
    pass


class TrailingGarbage(FormatError):
    """Extra bytes after the body, or nonzero padding bits."""


class NonCanonicalSize(FormatError):
    """Long-form size prefix used for a vertex count that fits in one byte."""


class TooLarge(FormatError):
    pass


class EdgeListSyntaxError(FormatError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
