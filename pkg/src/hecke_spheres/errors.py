"""Exception types raised across the package."""


class HeckeError(Exception):
    """Base class for errors raised by hecke_spheres."""


class DivisionByZero(HeckeError, ZeroDivisionError):
    pass


class DenominatorVanishes(HeckeError, ZeroDivisionError):
    """A specialization hit a genuine pole of a reduced rational function."""


class DomainError(HeckeError, ValueError):
    pass


class RankMismatch(HeckeError, ValueError):
    pass


class CapExceeded(HeckeError, ValueError):
    pass


class NotDiagonal(HeckeError, ArithmeticError):
    pass


class IdentityFailure(HeckeError, AssertionError):
    """A closed-form identity did not hold for the computed objects."""
