"""Exception types shared across the package."""


class CoxflipError(Exception):
    """Base class for all package-specific errors."""


class RangeError(CoxflipError, ValueError):
    """An index or size parameter is outside its allowed range."""


class ValidationError(CoxflipError, ValueError):
    """Malformed input data (bad edge list, bad bitstring, ...)."""


class DimensionError(CoxflipError, ValueError):
    """Operands have incompatible or unsupported dimensions."""


class SingularError(CoxflipError, ArithmeticError):
    """A matrix that needed to be invertible has rank < n."""


class CapacityError(CoxflipError, RuntimeError):
    """A search or enumeration would exceed its configured cap."""


class BackendError(CoxflipError, RuntimeError):
    """The requested operation needs a group backend that is unavailable."""


class NotPermutationError(CoxflipError, ValueError):
    """A matrix does not permute the distinguished vector family."""


class UnsupportedFamilyError(CoxflipError, ValueError):
    """A closed-form result was requested outside the A/D/E families."""
