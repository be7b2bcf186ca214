"""Exception types shared across the package."""


class GossetError(Exception):
    """Base class for errors raised by this package."""


class DiagramSpecError(GossetError, ValueError):
    """Unknown diagram name or malformed diagram specification string."""


class FiniteTypeError(GossetError, ValueError):
    """Diagram is not of finite type (Gram matrix not positive definite),
    or a root-closure run exceeded the safety cap."""


class ConvergenceError(GossetError, RuntimeError):
    """An iterative solver failed to converge within its iteration cap."""
