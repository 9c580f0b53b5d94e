"""Exception hierarchy for the whole package."""


class VirtconeError(Exception):
    """Base class for all engine errors."""


class RingMismatchError(VirtconeError):
    """Operands live in different polynomial rings."""


class NonHomogeneousError(VirtconeError):
    """A (multi)degree was requested for a non-homogeneous polynomial."""


class UnboundVariableError(VirtconeError):
    """A substitution left a variable without an image."""


class BudgetExceededError(VirtconeError):
    """A resource budget (basis size or degree) was exhausted."""


class UnluckyDrawError(VirtconeError):
    """Independent generic redraws disagreed; the draw was not generic."""


class PositiveDimensionalError(VirtconeError):
    """A zero-dimensional scheme was expected but the input has positive dimension."""


class GeometryError(VirtconeError):
    """A geometric precondition failed (empty scheme, X = Y, rank bookkeeping...)."""


class ParseError(VirtconeError):
    """Script syntax error, with source position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{line}:{col}: {message}")
        self.line = line
        self.col = col


class BindingError(ParseError):
    """A script name was used before being bound, or an ambient is missing."""
