"""Exception hierarchy for h4space."""


class H4Error(ValueError):
    """Base class for all errors raised by h4space."""


class DomainError(H4Error):
    """An argument lies outside the domain where the quantity is real/defined."""


class NegativeQuarticForm(DomainError):
    """Product of the four isotropic coordinates is negative (space-like separation)."""


class NegativeForm(DomainError):
    """Product of the three H3 isotropic coordinates is negative."""


class OutsideDomain(DomainError):
    """Spatial offset is not strictly inside the ball r < T."""


class OutsideCausalRegion(DomainError):
    """Surface value S^4 fell outside [0, T^4]."""


class SuperluminalError(DomainError):
    """Velocity is on or outside the flat-sided light cone."""


class DegenerateError(DomainError):
    """A denominator (time separation, velocity-addition denominator) vanished."""


class ConfigError(H4Error):
    """Invalid user configuration, e.g. an empty or inverted grid range."""
