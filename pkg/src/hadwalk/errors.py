"""Exception hierarchy for domain errors.

Everything derives from :class:`DomainError` so callers (and the CLI) can
distinguish "the math rejected your input" from programming errors.
"""


class DomainError(ValueError):
    """Base class for all input-domain violations."""


class NotUnitaryError(DomainError):
    """Coin matrix failed the unitarity check."""

    def __init__(self, deviations, max_dev, tol):
        self.deviations = deviations
        self.max_dev = max_dev
        self.tol = tol
        super().__init__(
            f"matrix is not unitary: max entrywise |C C† - I| = {max_dev:.3e} "
            f"exceeds {tol:.1e}; deviations = {deviations}"
        )


class WindowTooSmallError(DomainError):
    """Lattice window too small for the requested operation."""


class ZeroCornerEntryError(DomainError):
    """Transfer matrices need a nonzero top-left coin entry."""


class NotOnUnitCircleError(DomainError):
    """Eigenvalue parameter must lie on the complex unit circle."""


class ZeroInputError(DomainError):
    """Initial spinor must not be the zero vector."""


class DegeneratePrefactorError(DomainError):
    """Double-root eigenfunction prefactor vanished (lambda^2 + det = 0)."""


class DegenerateCoinError(DomainError):
    """Rotation coin with a vanishing entry has no double-root eigenvalues."""


class DegenerateThetaError(DomainError):
    """theta in {0, pi}: the oscillatory phase is undefined (measure is flat)."""


class WrongRegionError(DomainError):
    """Operation called with theta outside its home region."""


class NotK1Error(WrongRegionError):
    pass


class NotK2Error(WrongRegionError):
    pass


class NotK3Error(WrongRegionError):
    pass


class OnK1Error(WrongRegionError):
    """Operation requires distinct characteristic roots (theta not in K1)."""


class AmplitudeOverflowError(DomainError):
    """Eigenfunction amplitudes left the representable double range."""


class ClassificationError(RuntimeError):
    """Internal cross-check of a classification against the iteration oracle failed."""
