"""Exception hierarchy for qesoptics."""


class QesError(Exception):
    """Base class for all errors raised by this package."""


class ModelError(QesError, ValueError):
    """The model record does not describe a valid Hamiltonian."""


class EmptyModeList(ModelError):
    pass


class NonPositiveFrequency(ModelError):
    pass


class NonPositiveExponent(ModelError):
    pass


class InvalidFrequency(ModelError):
    """A frequency could not be read as an exact rational."""


class ConstraintViolated(ModelError):
    """sum(n*nu) != sum(m*mu); carries both exact sums."""

    def __init__(self, lhs, rhs):
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(
            f"energy conservation violated: sum(n*nu) = {lhs} but sum(m*mu) = {rhs}"
        )


class DimensionMismatch(QesError, ValueError):
    pass


class NegativeExponent(QesError, RuntimeError):
    pass


class InvalidSector(QesError, ValueError):
    pass


class IndexOutOfRange(QesError, IndexError):
    pass


class NotTridiagonal(QesError, ValueError):
    pass


class AsymmetryDetected(QesError, ValueError):
    pass


class ToleranceTooSmall(QesError, ValueError):
    pass


class CrossCheckFailed(QesError, RuntimeError):
    """Bisection and the dense solver disagree beyond tolerance."""


class NonIntegerEntry(QesError, ArithmeticError):
    pass


class SeedTooLarge(QesError, ValueError):
    pass
