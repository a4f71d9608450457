"""Exception hierarchy shared by the library, the service and the CLI."""


class BellPolyError(Exception):
    """Base class for all package-specific failures."""


class ConfigError(BellPolyError):
    """A sweep/audit configuration is malformed; the message names the field."""


class CapacityError(BellPolyError):
    """A request exceeds the dense-representation site limit."""


class NumericalConsistencyError(BellPolyError):
    """An algebraic identity that must hold numerically was violated."""
