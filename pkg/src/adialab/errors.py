"""Exception hierarchy shared across the package."""


class AdialabError(Exception):
    """Base class for all adialab-specific errors."""


class InvalidState(AdialabError, ValueError):
    """A state container received data violating its invariants."""


class DimensionMismatch(AdialabError, ValueError):
    """Two states/operators of different Hilbert-space dimensions were combined."""


class AncillaTooSmall(AdialabError, ValueError):
    """Requested ancilla dimension cannot hold the rank of the density matrix."""


class OrthogonalStates(AdialabError):
    """Initial and final states are (numerically) orthogonal: the minimal
    runtime diverges and no interpolation problem can be posed."""


class IdenticalStates(AdialabError):
    """Initial and final states coincide up to phase: the orthogonal
    complement vector is undefined and the runtime is zero."""


class InvalidEpsilon(AdialabError, ValueError):
    """Precision parameter outside the accepted range (0, 1]."""


class NotPromised(AdialabError, ValueError):
    """Boolean function is neither constant nor balanced."""


class StepTooLarge(AdialabError, RuntimeError):
    """Integrator step produced a unitarity defect above the configured
    tolerance."""
