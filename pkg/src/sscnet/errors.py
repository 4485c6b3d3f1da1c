"""Exception hierarchy shared by all modules."""


class SscError(Exception):
    """Base class for every error raised by this package."""


class InvalidNetwork(SscError, ValueError):
    pass


class DuplicateInputAttachment(InvalidNetwork):
    pass


class DanglingEdge(InvalidNetwork):
    pass


class EmptyStateSet(InvalidNetwork):
    pass


class NodeInAlpha(SscError, ValueError):
    pass


class TooLarge(SscError):
    pass


class NotAccessible(SscError):
    pass


class SignViolation(SscError, ValueError):
    pass


class MissingWeight(SscError, ValueError):
    pass


class ExtraWeight(SscError, ValueError):
    pass


class NotAPactus(SscError):
    pass


class DisconnectedState(SscError):
    pass


class NotAPath(SscError, ValueError):
    pass


class NotATree(SscError, ValueError):
    pass


class NotACycle(SscError, ValueError):
    pass


class TooFewInputs(SscError, ValueError):
    pass


class WrongInputCount(SscError, ValueError):
    pass


class MultiBridge(SscError):
    pass


class ComponentNotSsc(SscError):
    pass


class NotNeighbors(SscError, ValueError):
    pass


class StageUnsatisfiable(SscError):
    pass


class DocumentError(SscError):
    """Malformed network document; carries an optional source position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)
