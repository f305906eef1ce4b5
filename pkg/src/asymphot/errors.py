"""Exception hierarchy shared across the package.

Configuration problems and numerical problems are kept in separate branches
so the command-line driver can map them to distinct exit codes.
"""


class AsymphotError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(AsymphotError, ValueError):
    """A physical argument is outside its valid domain (e.g. k <= 0)."""


class ConfigError(AsymphotError, ValueError):
    """Base class for configuration problems (exit code 1)."""


class ConfigSyntaxError(ConfigError):
    """Malformed configuration text; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnknownKeyError(ConfigError):
    """A configuration key that no scenario understands."""


class InvalidValueError(ConfigError):
    """A configuration value that violates an invariant (e.g. negative length)."""


class NumericalError(AsymphotError, ArithmeticError):
    """Base class for numerical failures (exit code 2)."""


class SingularStructureError(NumericalError):
    """Transfer matrix with M11 = 0: the structure is a perfect reflector here."""


class ResonanceSingularityError(NumericalError):
    """Zero denominator in the closed-form cavity solution (lossless pole).

    Carries the vacuum wavenumber at which the singularity occurred when known.
    """

    def __init__(self, message: str, k: float | None = None):
        self.k = k
        if k is not None:
            message = f"{message} (k = {k!r} rad/um)"
        super().__init__(message)


class PhaseMatchedError(NumericalError):
    """Poling period requested for a process that is already phase matched."""
