"""Exception hierarchy shared by all modules.

Exit-code mapping used by the CLI lives in cli.py: InputError -> 2,
IndeterminateError and BudgetError -> 3, inconclusive verdicts -> 4.
"""


class HklatError(Exception):
    """Base class for all library errors."""


class InputError(HklatError, ValueError):
    """Malformed or inconsistent input (wrong lattice, mismatched bases, ...)."""


class ConfigurationError(HklatError):
    """A required optional field (Fujiki constant, complex dimension) is missing."""


class IndeterminateError(HklatError):
    """A certified decision could not be reached within the precision budget.

    Raised instead of guessing: interval straddles zero, root not isolated,
    order search exhausted.
    """


class BudgetError(HklatError):
    """A bounded deterministic search (e.g. the shift parameter search) failed."""


class OnWallError(HklatError):
    """A point pairs to zero against a wall where a strict sign was required."""

    def __init__(self, wall, message=None):
        self.wall = wall
        super().__init__(message or f"point lies on wall {wall}")
