"""Exception hierarchy shared across the package."""


class CoevenError(Exception):
    """Base class for every error raised by this package."""


class InvalidVertexError(CoevenError, ValueError):
    pass


class NotAnEdgeError(CoevenError, ValueError):
    pass


class InvalidCertificateError(CoevenError, ValueError):
    """A certificate handed to a lift does not satisfy its precondition."""


class TooLargeError(CoevenError, ValueError):
    """Input exceeds a configured size cap (oracle, graph6 header, enumeration)."""


class Graph6ParseError(CoevenError, ValueError):
    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


class InvalidQueryError(CoevenError, ValueError):
    """Unknown operation/relation tag or a combination that means nothing."""
