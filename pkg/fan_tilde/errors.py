from __future__ import annotations


class FanTildeError(Exception):
    """Base class for every error raised by fan_tilde."""


class GraphFormatError(FanTildeError):
    """Input text does not describe a graph in the declared format.

    Attributes:
        line : 1-based line number in the input, if known.
        position : 0-based byte or token offset within that line, if known.

    """

    def __init__(self, error: str, line: int | None = None, position: int | None = None):
        super().__init__(error)
        self.line = line
        self.position = position

    def __str__(self):
        error_msg = super().__str__()
        where = []
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.position is not None:
            where.append(f"offset {self.position}")
        return f"{error_msg} ({', '.join(where)})" if where else error_msg


class EmptyInputError(GraphFormatError):
    pass


class HeaderError(GraphFormatError):
    pass


class ByteRangeError(GraphFormatError):
    pass


class TruncatedInputError(GraphFormatError):
    pass


class SelfLoopError(GraphFormatError):
    pass


class VertexRangeError(GraphFormatError):
    pass


class TokenError(GraphFormatError):
    pass


class GraphSizeError(FanTildeError):
    pass


class PreconditionError(FanTildeError):
    """An operation was called on input its statement does not cover."""


class ThresholdError(FanTildeError):
    """A neighbour-split threshold index does not exist for this path."""

    def __init__(self, error: str, threshold: str):
        super().__init__(error)
        self.threshold = threshold

    def __str__(self):
        return f"{self.threshold}: {super().__str__()}"


class RewriteError(FanTildeError):
    """A rewrite rule was rejected; ``check`` names the failing precondition."""

    def __init__(self, error: str, rule: str, check: str):
        super().__init__(error)
        self.rule = rule
        self.check = check

    def __str__(self):
        return f"{self.rule} rejected ({self.check}): {super().__str__()}"


class PathError(FanTildeError):
    """A vertex sequence is not a valid path or cycle of its host graph."""

    def __init__(self, error: str, check: str):
        super().__init__(error)
        self.check = check


class InstanceTooLargeError(FanTildeError):
    pass


class UnknownConditionError(FanTildeError):
    pass
