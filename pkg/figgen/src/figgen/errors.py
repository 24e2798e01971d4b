"""Exception types. Two failure families: the spec is wrong, or an input is."""


class FiggenError(Exception):
    """Base class for every figgen failure."""


class SpecError(FiggenError):
    """The figure spec itself is malformed (bad kind, bad overlay, ...)."""


class InputError(FiggenError):
    """An input artifact is missing, truncated, or lacks required columns."""
