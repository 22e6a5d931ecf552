"""Exception types shared across the package."""


class KerrlcsError(ValueError):
    """Base class for all package-specific errors."""


class ConfigurationError(KerrlcsError):
    """Bad configuration: wrong variable count, mismatched seeds, bad ranges."""


class DomainError(KerrlcsError):
    """Elementary function evaluated outside its real domain."""

    def __init__(self, func: str, value) -> None:
        self.func = func
        self.value = value
        super().__init__(f"{func} undefined at {value!r}")


class ChartError(KerrlcsError):
    """Operation mixing forms or maps that live on different charts."""


class DegreeError(KerrlcsError):
    """Form degree out of range for the requested operation."""


class SingularMetricError(KerrlcsError):
    """Metric determinant vanishes at the evaluation point."""


class SingularLocusError(KerrlcsError):
    """Point on (or too close to) the excluded singular set."""


class LeeSingularityError(KerrlcsError):
    """Lee form undefined: |t| below the configured margin."""


class AtInfinityError(KerrlcsError):
    """Unitary has an eigenvalue at 1: preimage lies at infinity."""


class NotATorusMapError(KerrlcsError):
    """Matrix is not integral, so it does not descend to the torus."""
