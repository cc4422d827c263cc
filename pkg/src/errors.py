"""
Error types for the surface laboratory.
Created by Sergie Code

Every failure the library can surface derives from SurfLabError, which
carries the process exit code the command line maps it to.
"""


class SurfLabError(Exception):
    """Base class for all library errors."""

    exit_code = 2


class ConfigError(SurfLabError):
    """Invalid surface description or command-line arguments."""


class DomainError(ConfigError):
    """A point or path lies outside the parameter domain."""


class DataConditionError(ConfigError):
    """Holomorphic data violates its nondegeneracy condition at a queried point."""


class ParseError(SurfLabError):
    """Expression text could not be parsed.

    Attributes:
        offset (int): byte offset of the offending token
        expected (frozenset): descriptions of the tokens that would be accepted
    """

    def __init__(self, message, offset, expected=()):
        self.offset = offset
        self.expected = frozenset(expected)
        detail = f" (expected one of: {', '.join(sorted(self.expected))})" if self.expected else ""
        super().__init__(f"{message} at byte {offset}{detail}")


class EvaluationError(SurfLabError):
    """Numerical evaluation of an expression failed.

    The evaluator attaches the source offset of the failing node.
    """

    def __init__(self, message, offset=None):
        super().__init__(message)
        self.message = message
        self.offset = offset

    def __str__(self):
        if self.offset is None:
            return self.message
        return f"{self.message} (at byte {self.offset})"


class DivisionByZeroError(EvaluationError):
    pass


class BranchCutError(EvaluationError):
    pass


class InsufficientJetOrderError(SurfLabError):
    """A derivative beyond the available jet order was requested."""


class OnSingularSetError(SurfLabError):
    """A quantity undefined on {|g| = 1} was requested there."""


class ExplicitOmegaRequiredError(SurfLabError):
    """Formula-mode omega cannot be continued across |g| = 1."""


class NonConvergenceError(SurfLabError):
    """An iterative procedure hit its iteration or depth limit."""


class NotClosedError(SurfLabError):
    """The one-form of the constant mean curvature construction is not closed.

    Attributes:
        residual (float): worst sampled closedness residual
        location (complex): where the worst residual was sampled
    """

    def __init__(self, residual, location):
        self.residual = residual
        self.location = location
        super().__init__(f"closedness residual {residual:.3e} at z={location}")


class DegenerateError(SurfLabError):
    """The singular point is degenerate (g_z vanishes)."""


class NotSingularError(SurfLabError):
    """The queried point is not on the singular set."""


class NotFirstKindError(SurfLabError):
    """The singular point is not of the first kind."""


class TracingError(SurfLabError):
    """Base class for singular-curve tracing failures."""


class LeftDomainError(TracingError):
    pass


class DegenerateOnCurveError(TracingError):
    pass


class TooFewSamplesError(SurfLabError):
    pass


class ChartFailureError(SurfLabError):
    """The singular and null directions do not span a chart."""
