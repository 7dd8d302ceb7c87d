"""Exception types shared across the package.

The CLI maps these onto exit codes, so keep the hierarchy flat and stable:
input that cannot be read -> ParseError, input that reads but violates a
structural rule -> BuildError, operations called outside their domain ->
DomainError, and data too degenerate to fit -> DegenerateDataError.
"""


class PcnlabError(ValueError):
    """Base class for all errors raised by this package."""


class ParseError(PcnlabError):
    """Malformed snapshot or edge-list input.

    ``offset`` is a byte offset into the document when known; ``line`` is a
    1-based line number for line-oriented formats.
    """

    def __init__(self, message, offset=None, line=None):
        super().__init__(message)
        self.offset = offset
        self.line = line


class BuildError(PcnlabError):
    """Records parsed fine but cannot form a valid graph (e.g. unknown endpoint)."""


class DomainError(PcnlabError):
    """Operation called with arguments outside its defined domain."""


class DegenerateDataError(DomainError):
    """Sample too degenerate for the requested fit (e.g. all values identical)."""
