"""Exception hierarchy shared by every xfam module."""


class XfamError(Exception):
    """Base class for all errors raised by xfam."""


class ParameterError(XfamError, ValueError):
    """An argument lies outside the documented range of an operation."""


class FormatError(ParameterError):
    """A family or coloring file could not be parsed."""


class UndefinedCoverError(XfamError, ValueError):
    """The covering number is undefined (the family contains the empty set)."""


class CapacityError(XfamError, RuntimeError):
    """A search instance exceeds the oracle's hard capacity or node budget."""
