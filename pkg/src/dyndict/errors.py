"""Exception types raised by the dictionary structures."""


class DyndictError(Exception):
    """Base class for all errors raised by this package."""


class EmptyPattern(DyndictError, ValueError):
    pass


class DuplicatePattern(DyndictError, KeyError):
    pass


class UnknownPattern(DyndictError, KeyError):
    pass


class RedundantMark(DyndictError):
    """A mark/unmark request that would not change the node's state."""


class CycleCreated(DyndictError):
    """A relink request that would make a node its own ancestor."""


class CapExceeded(DyndictError, ValueError):
    pass


class BadParams(DyndictError, ValueError):
    pass


class ParseError(DyndictError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
