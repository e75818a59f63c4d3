"""Exception types shared across the package."""


class WellbeingError(Exception):
    """Base class for every error raised by this package."""


class DomainError(WellbeingError, ValueError):
    """Invalid input: violated precondition, bad parameter, malformed file."""


class IntegrationError(WellbeingError, RuntimeError):
    """ODE integration aborted before reaching the end time.

    Attributes:
        last_time: last time at which a valid state was accepted, or None.
        last_state: (B, B_star) at last_time, or None.
    """

    def __init__(self, message, *, last_time=None, last_state=None):
        super().__init__(message)
        self.last_time = last_time
        self.last_state = last_state


class QuadratureError(WellbeingError, RuntimeError):
    """Adaptive quadrature exhausted its bisection depth.

    Attributes:
        partial: best available estimate of the whole integral, or None.
        error_estimate: accumulated error estimate at the point of failure.
    """

    def __init__(self, message, *, partial=None, error_estimate=None):
        super().__init__(message)
        self.partial = partial
        self.error_estimate = error_estimate
