"""Exception types shared across the package."""


class ContactGeoError(Exception):
    """Base class for all package-specific errors."""


class JetOrderError(ContactGeoError, ValueError):
    """Requested jet order outside the supported range."""


class DegenerateContact(ContactGeoError):
    """The declared frame fails the contact (non-integrability) condition."""


class SingularFrame(ContactGeoError):
    """Frame vectors are linearly dependent / frame matrix not invertible."""


class CharacteristicPoint(ContactGeoError):
    """Surface point with |a| too close to 1 for the requested quantity."""


class RankDeficient(ContactGeoError):
    """Immersion differential does not have rank 2 at the probed point."""


class NonConvergent(ContactGeoError):
    """Adaptive quadrature exhausted its depth budget with a large residual."""


class IllConditionedFit(ContactGeoError):
    """Slope fit residual too large; profile does not look differentiable."""


class StarViolation(ContactGeoError):
    """One-sided derivative of psi vanishes at a W+/W- point (condition (*) fails)."""


class CornerPoint(ContactGeoError):
    """Curve parameter coincides with a corner where a two-sided quantity was requested."""


class ZeroVector(ContactGeoError):
    """A direction argument was the zero vector."""


class UnsupportedBoundary(ContactGeoError):
    """Boundary intersects the characteristic set on a set of positive measure."""


class ConfigError(ContactGeoError):
    """Scenario configuration failed to parse or validate."""
