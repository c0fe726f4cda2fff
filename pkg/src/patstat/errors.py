"""Shared exception types."""


class PatternError(ValueError):
    """Malformed pattern text or letters that violate the pattern invariants."""


class BudgetError(RuntimeError):
    """A requested computation exceeds a configured enumeration budget.

    The message always names the bound that was hit, so callers (and the CLI)
    can report exactly which knob to raise.
    """


class FitMismatchError(ArithmeticError):
    """Supplied interpolation points are inconsistent with one polynomial.

    Raised when over-determined data fails the consistency re-check; this
    signals a wrong-degree hypothesis or a bug in whatever produced the data.
    """
