class ParameterError(ValueError):
    """A numeric parameter violates an operation's hypothesis."""


class RangeError(ValueError):
    """A query falls outside the range a constructed object covers."""
