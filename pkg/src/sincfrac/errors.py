"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SincFracError(Exception):
    """Base class for all errors raised by :mod:`sincfrac`."""


class DomainError(SincFracError, ValueError):
    """An argument lies outside the domain of the operation."""


class ConfigError(SincFracError, ValueError):
    """A configuration value is invalid (tolerances, orders, windows, ...)."""


class NumericError(SincFracError, ArithmeticError):
    """A numerical procedure did not reach its requested accuracy.

    The best available estimate and its error bound are kept so callers can
    decide whether the partial result is still usable.
    """

    def __init__(self, message: str, estimate: float | complex | None = None,
                 error: float | None = None) -> None:
        super().__init__(message)
        self.estimate = estimate
        self.error = error


class SingularityError(NumericError):
    """A transform-domain solution was evaluated on (or across) a pole."""

    def __init__(self, message: str, zeta: float, s: float | complex) -> None:
        super().__init__(message)
        self.zeta = zeta
        self.s = s


class InversionError(NumericError):
    """An image could not be evaluated at one of the inversion abscissae."""

    def __init__(self, message: str, abscissa: float | complex) -> None:
        super().__init__(message)
        self.abscissa = abscissa
