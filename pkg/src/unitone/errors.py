"""Exception types shared across the package."""


class GridError(ValueError):
    """Rejected input: malformed or incompatible grid/axis data."""


class ConfigError(ValueError):
    """Rejected configuration: unknown key, bad value, missing entry."""


class StabilityError(RuntimeError):
    """Time step violates the stability limit of the scheme."""


class DivergenceError(RuntimeError):
    """The numerical solution left the representable range (NaN/overflow)."""


class NoSolitaryWaveError(RuntimeError):
    """The profile search found no decaying solution for the given parameters."""


class UnsupportedVariantError(ValueError):
    """Operation not defined for this nonlinearity variant."""
