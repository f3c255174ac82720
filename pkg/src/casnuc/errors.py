"""Exception hierarchy shared across the package."""


class CasnucError(Exception):
    """Base class for all casnuc errors."""


class DomainError(CasnucError, ValueError):
    """A physical argument is outside the domain of the requested quantity."""


class UnitError(CasnucError, ValueError):
    """A unit conversion between incompatible dimensions was requested."""


class NumericalError(CasnucError, RuntimeError):
    """A numerical evaluation produced no trustworthy result."""


class ConvergenceError(NumericalError):
    """An iterative evaluation exhausted its budget before converging."""
