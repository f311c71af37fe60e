"""Exception types raised across the package."""


class ButterflyError(Exception):
    """Base class for all package errors."""


class DuplicateEdgeError(ButterflyError, ValueError):
    def __init__(self, left, right, line_no=None):
        self.left = left
        self.right = right
        self.line_no = line_no
        where = f" (line {line_no})" if line_no is not None else ""
        super().__init__(f"duplicate edge ({left}, {right}){where}")


class IndexOutOfRangeError(ButterflyError, IndexError):
    pass


class UnknownVertexError(ButterflyError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "unknown vertex"


class MalformedLineError(ButterflyError, ValueError):
    def __init__(self, line_no, reason):
        self.line_no = line_no
        self.reason = reason
        super().__init__(f"line {line_no}: {reason}")


class EmptyInputError(ButterflyError, ValueError):
    pass


class TooLargeError(ButterflyError, ValueError):
    pass


class InvalidRhoError(ButterflyError, ValueError):
    pass


class InvalidTrialsError(ButterflyError, ValueError):
    pass


class SamePartitionRequiredError(ButterflyError, ValueError):
    pass


class IdenticalVerticesError(ButterflyError, ValueError):
    pass
