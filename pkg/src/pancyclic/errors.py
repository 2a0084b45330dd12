"""Exception types raised by the library.

Errors are deliberately loud: a search that runs out of budget raises
``BudgetExceeded`` rather than pretending it proved absence, and a
construction whose arithmetic precondition fails raises
``PreconditionFailed`` carrying the inequality that was violated.
"""

from __future__ import annotations


class PancyclicError(Exception):
    """Base class for all library errors."""


class CapExceeded(PancyclicError):
    """Instance is larger than the configured exact-oracle cap.

    Signals the caller to skip oracle verification; the oracles never
    approximate.
    """


class BudgetExceeded(PancyclicError):
    """A bounded exhaustive search ran out of budget.

    The result is *unknown*, never absence.
    """


class PreconditionFailed(PancyclicError):
    """An arithmetic precondition of a constructive step is violated.

    ``inequality`` holds a human-readable rendering of the failed check and
    ``partial`` whatever partial result was built before the failure.
    """

    def __init__(self, message: str, inequality: str = "", partial=None):
        super().__init__(message)
        self.inequality = inequality
        self.partial = partial


class InternalContradiction(PancyclicError):
    """A step that is mathematically forced on valid inputs found no move.

    Firing means the input violated an unchecked hypothesis (typically the
    claimed independence bound).
    """


class NoChordFound(PancyclicError):
    """A chord search over a window of consecutive path vertices came up empty.

    For shortening this is only possible when the claimed independence bound
    is wrong; for chord-density certificates it is a genuine finding (the
    scanned window induces a chordless path), exposed via ``induced_path``.
    """

    def __init__(self, message: str, induced_path=None):
        super().__init__(message)
        self.induced_path = induced_path


class MissingWitness(PancyclicError):
    """A required pre-collected witness edge is missing."""


class InvalidBank(PancyclicError):
    """A path bank violates its structural invariants."""


class InvalidGamma(PancyclicError):
    """Cluster-growth parameter outside (0, 1/2)."""


class InvalidK(PancyclicError):
    """Generator parameter k outside its valid range."""


class Infeasible(PancyclicError):
    """A randomized generator exhausted its attempt budget."""
