"""Exceptions shared across the package."""


class DivergentIntegralError(ValueError):
    """Raised when the requested integral does not converge (n = 1 with m = 0)."""


class ToleranceNotMetError(RuntimeError):
    """Raised when a numeric routine cannot certify the requested tolerance.

    Carries the error estimate that was actually achieved.
    """

    def __init__(self, message: str, achieved: float):
        super().__init__(f"{message} (achieved error estimate {achieved:.3e})")
        self.achieved = achieved
