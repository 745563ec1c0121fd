"""Exception types raised by the numerical layers of the package."""


class EigensieveError(Exception):
    """Base class for numerical failures specific to this package."""


class TrivialNullspaceError(EigensieveError):
    """The stacked constraints admit no nonzero feasible state."""


class IllConditionedMassError(EigensieveError):
    """Compressed mass operator is too ill-conditioned to invert."""


class GeneralizedUnsupportedError(EigensieveError):
    """Operation is defined only for systems without a mass operator."""


class UndefinedSubspaceError(EigensieveError):
    """A zero vector spans no subspace, so angles are undefined."""


class ZeroReferenceError(EigensieveError):
    """Relative error against a zero-norm reference is undefined."""


class DivergenceError(EigensieveError):
    """Fixed-step time integration blew up."""


class ImaginaryResidueError(EigensieveError):
    """Reconstructed real field kept a non-negligible imaginary part."""
