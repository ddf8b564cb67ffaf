"""Exception hierarchy shared by every layer of the package."""


class GraphRingError(Exception):
    """Base class for all errors raised by this package."""


class InputError(GraphRingError):
    """Invalid argument: bad vertex index, probability out of range, etc."""


class FormatError(GraphRingError):
    """Malformed serialized data (graph6 string, edge list, ...)."""


class ResourceBudgetError(GraphRingError):
    """A configurable work budget (clique count, catalog order, vertex
    growth) would be exceeded."""


class CliqueZeroDivisionError(GraphRingError):
    """Division by an element whose clique functional is zero."""


class ExprSyntaxError(GraphRingError):
    """Syntax error in the expression language, with source position."""

    def __init__(self, message: str, line: int, column: int, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        suffix = ""
        if self.expected:
            suffix = " (expected %s)" % ", ".join(self.expected)
        super().__init__("%d:%d: %s%s" % (line, column, message, suffix))


class ExprTypeError(GraphRingError):
    """An operation or function applied to a value of the wrong kind."""
