"""Exception hierarchy.

Every exception carries a ``code`` equal to its class name; the CLI prints it
as a machine-parseable prefix.
"""


class LvoscError(Exception):
    """Base class for all package errors."""

    @property
    def code(self):
        return type(self).__name__


class InvalidParameter(LvoscError, ValueError):
    """A physical or numerical input violates its type invariants."""


class DomainError(LvoscError, ValueError):
    """Special-function argument outside its supported domain."""


class ImaginaryFrequency(LvoscError):
    """Omega^2 < 0: the background produces no confining r^2 term."""


class ImaginaryCentrifugal(LvoscError):
    """tau^2 < 0: the centrifugal index is not real."""


class NoBoundStates(LvoscError):
    """Zero confinement strength; the radial equation is of Bessel type."""


class NoConfinement(NoBoundStates):
    """Cornell case with delta = 0."""


class TachyonicLevel(LvoscError):
    """A level with epsilon^2 < 0."""


class NegativeDiscriminant(LvoscError):
    """alpha8 or alpha9 of the NU method is negative."""

    def __init__(self, which, value):
        self.which = which
        self.value = value
        super().__init__(f"{which} = {value!r} < 0")


class Unsupported(LvoscError):
    """Requested branch is not implemented (alpha3 != 0 eigenfunctions)."""


class ConvergenceError(LvoscError):
    """An iterative solver did not reach its tolerance."""


class NumericalFailure(LvoscError):
    """Non-finite input or breakdown inside the eigen-solver."""


class GridTooCoarse(LvoscError):
    """Doubling the grid changes eigenvalues by more than the tolerance."""
