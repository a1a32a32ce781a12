"""Exception types shared across the library and mapped to CLI exit codes."""


class TransducerError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(TransducerError, ValueError):
    """Bad input values or configuration (CLI exit code 1)."""


class NumericalError(TransducerError, ArithmeticError):
    """Well-formed input hit a singularity or instability (CLI exit code 2)."""


class UnknownMaterialError(ValidationError):
    """Material name is neither bundled nor a readable data file."""


class ConfigError(ValidationError):
    """Config failure; ``key`` names the offending entry."""

    def __init__(self, key, message):
        super().__init__(f"{key}: {message}")
        self.key = key


class SingularResponseError(NumericalError):
    """Scattering denominator vanished (lossless undriven limit)."""


class ParametricOscillationError(NumericalError):
    """Pump at or above the parametric oscillation threshold."""


class StepSizeError(ValidationError):
    """Integration step too coarse for the fastest rate in the problem."""


class NonFiniteStateError(NumericalError):
    """Integration produced a non-finite mode amplitude."""
