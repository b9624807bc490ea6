"""Exception hierarchy.

Domain errors subclass ValueError so callers that only know the standard
library can still catch them; the CLI maps the three branches onto distinct
exit codes (config -> 2, domain/validation -> 3, solver -> 4).
"""


class TrapspecError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(TrapspecError):
    """A configuration document could not be parsed or validated."""


class DomainError(TrapspecError, ValueError):
    """An input lies outside the physical or mathematical domain of an operation."""


class ConfinementError(DomainError):
    """Geometry does not confine along z (curvature parameter a <= 0)."""


class StabilityError(DomainError):
    """Trap parameters violate a stability bound (e.g. omega_c^2 <= 2 omega_z^2)."""


class ExcludedLevelError(DomainError):
    """The requested level is absent from the partner tower (removed ground state)."""


class NormalizabilityError(DomainError):
    """Requested state is not normalizable (defect too large for the tower)."""


class SingularityError(DomainError):
    """Field evaluation requested on (or too close to) a conductor."""


class OracleError(TrapspecError):
    """Base class for numerical-solver failures."""


class BracketError(OracleError):
    """No energy bracket with the requested node count could be established."""


class ConvergenceError(OracleError):
    """Iteration limit reached before the convergence target."""


class AccuracyError(OracleError):
    """A quadrature or refinement loop could not reach the requested tolerance."""
