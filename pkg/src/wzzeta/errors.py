"""Exception types raised across the package."""


class PoleError(ZeroDivisionError):
    """A rational function or Pochhammer denominator vanished."""


class DomainError(ValueError):
    """An argument lies outside the supported domain of an evaluator."""


class ConvergenceError(ArithmeticError):
    """A series or continued fraction failed to converge as planned."""


class NoCertificateError(ArithmeticError):
    """The certificate ansatz admits no solution at the requested degrees."""


class UnderdeterminedError(ArithmeticError):
    """The certificate linear system is rank deficient."""


class NotRepresentableError(ValueError):
    """A transformed term cannot be written with affine Pochhammer bases."""
