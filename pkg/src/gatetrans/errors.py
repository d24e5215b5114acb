"""Exception types shared across the package.

Each class maps to one CLI error category (see cli.py) so failures stay
machine-parsable at the command line.
"""


class GatetransError(Exception):
    """Base class; carries a short category tag for the CLI."""

    category = "internal"


class ConfigError(GatetransError):
    """Invalid configuration value or inconsistent config combination."""

    category = "config"


class InputError(GatetransError):
    """Invalid runtime input (shapes, ranges, missing taps, bad labels)."""

    category = "input"


class DataError(GatetransError):
    """Dataset layout or manifest problems."""

    category = "data"


class CheckpointError(GatetransError):
    """Corrupt, truncated, or incompatible checkpoint file."""

    category = "checkpoint"


class MapperUnavailableError(GatetransError):
    """Style sampling requested before the noise-to-style mapper was fitted."""

    category = "unavailable"


class DivergenceError(GatetransError):
    """A loss term went non-finite during training."""

    category = "divergence"

    def __init__(self, term, message=None):
        self.term = term
        super().__init__(message or f"non-finite loss term: {term}")
