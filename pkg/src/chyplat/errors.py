"""Exception types shared across the package."""


class ChyplatError(Exception):
    """Base class for all package-specific errors."""


class InvalidConductorError(ChyplatError):
    """Conductor is below 3 or otherwise unusable."""


class FieldMismatchError(ChyplatError):
    """Operands live in different cyclotomic fields."""


class ConductorExtensionError(ChyplatError):
    """Target conductor is not a multiple of the source conductor."""


class PrecisionExhaustedError(ChyplatError):
    """A sign decision could not be certified at the precision cap."""


class DegenerateFormError(ChyplatError):
    """A Hermitian form or Gram matrix has a zero eigenvalue."""


class NonHermitianError(ChyplatError):
    """Matrix is not equal to its conjugate transpose, or has a bad scalar."""


class SearchExhaustedError(ChyplatError):
    """A bounded deterministic search ended without a hit."""


class InfiniteOrderError(ChyplatError):
    """Element order exceeded the requested cap."""


class NotRootOfUnityError(ChyplatError):
    """Determinant (or scalar) is not a root of unity."""


class RamifiedPrimeError(ChyplatError):
    """The rational prime divides the conductor."""


class NeedsDenominatorError(ChyplatError):
    """Entry denominator is not invertible modulo the chosen prime."""


class UnsupportedPrimeError(ChyplatError):
    """The certification pipeline does not handle this prime."""
