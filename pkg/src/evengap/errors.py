"""Exceptions shared across the package."""


class GcdNotOne(ValueError):
    """The generators have gcd > 1, so the complement would be infinite."""


class NotASemigroup(ValueError):
    """A candidate set fails additive closure (or contains negatives).

    ``witness`` holds a pair (a, b) of members whose sum lands outside the
    set, when one is known.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class GenusTooSmall(ValueError):
    """The requested genus is too small for the construction to exist."""


class NotInFiber(ValueError):
    """The semigroup does not halve to the expected base semigroup."""


class BudgetExceeded(RuntimeError):
    """A caller-supplied node budget ran out before the search finished."""


class CacheConflict(RuntimeError):
    """A cache row is corrupted or disagrees with another row or computation."""
