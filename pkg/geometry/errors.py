"""
Exception hierarchy shared by the geometry, synthesis and verification packages.
"""


class ShortcutToolError(Exception):
    """Base class for every error raised on purpose by this project."""


class DomainError(ShortcutToolError, ValueError):
    """An argument lies outside the range an operation is defined on."""


class DegenerateShortcutError(DomainError):
    """A shortcut of length zero was requested."""


class NumericError(ShortcutToolError, ArithmeticError):
    """A root finder failed to converge or numerics became inconsistent."""


class DocumentError(ShortcutToolError, ValueError):
    """A configuration document could not be read or parsed."""
