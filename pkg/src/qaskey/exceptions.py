"""Exception hierarchy shared by all numerical modules."""


class QSeriesError(Exception):
    """Base class for every error raised by :mod:`qaskey`."""


class DomainError(QSeriesError, ValueError):
    """Inputs fall outside the region where a formula is valid."""


class SpectrumError(DomainError):
    """The spectral point lies on the cut [-1, 1], where no minimal solution exists."""


class PoleError(QSeriesError, ZeroDivisionError):
    """A denominator factor vanishes.

    ``factor`` names the vanishing factor and ``index`` is the recurrence or
    summation index at which it happened (``None`` when not applicable).
    """

    def __init__(self, factor, index=None, detail=""):
        self.factor = factor
        self.index = index
        msg = f"vanishing factor {factor}"
        if index is not None:
            msg += f" at n={index}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class NonConvergence(QSeriesError, ArithmeticError):
    """A series, product or continued fraction exhausted its term budget."""

    def __init__(self, msg, terms_used=None, last_value=None):
        self.terms_used = terms_used
        self.last_value = last_value
        super().__init__(msg)


class DegenerateError(QSeriesError):
    """A formula degenerates (e.g. a zero leading coefficient) and no value is guessed."""


class GuardError(QSeriesError):
    """A check needs a certified parameter regime that could not be established."""


class ImaginaryResidueWarning(RuntimeWarning):
    """A quantity that should be real carries a non-negligible imaginary part."""
