"""Exception and warning types used across the package."""


class FracpoisError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParam(FracpoisError, ValueError):
    """A parameter is outside the domain an operation supports."""


class NonConvergence(FracpoisError, ArithmeticError):
    """A series or iteration hit its budget without meeting its tolerance."""


class QuadratureFailure(FracpoisError, ArithmeticError):
    """Adaptive quadrature could not reach the requested accuracy."""


class NumericalInstability(FracpoisError, ArithmeticError):
    """Every available evaluation route was rejected as too inaccurate."""


class RootFindingFailure(FracpoisError, ArithmeticError):
    """Bracketing or bisection failed while inverting a monotone function."""


class StepTooCoarse(FracpoisError, ArithmeticError):
    """A discretization was too coarse for its convergence check to be
    meaningful (residual at machine floor, or refinement not shrinking it)."""


class CancellationWarning(UserWarning):
    """An alternating series lost most of its significant digits to
    cancellation; the returned value may carry little precision."""


class NotApplicableWarning(UserWarning):
    """A requested asymptotic or diagnostic quantity degenerates for the
    given parameters; a conventional value is returned instead."""


class ExtrapolationWarning(UserWarning):
    """The returned value extends a derived pattern beyond the cases it was
    established for; treat it as indicative rather than exact."""
