"""Exception types raised by the solver stack."""


class ContractError(ValueError):
    """An input violates a documented precondition."""


class BracketError(ValueError):
    """The derivative does not change sign over the requested bracket."""


class SolverError(RuntimeError):
    """The eigensolver failed or returned a result that breaks its contract."""


class BoundaryLeakError(RuntimeError):
    """The finite-difference box is too small for the requested states."""


class ConvergenceAborted(RuntimeError):
    """A convergence study stopped early; ``partial`` holds the rows finished so far."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class VariationalBoundError(ConvergenceAborted):
    """A convergence column increased with basis size beyond round-off slack."""
