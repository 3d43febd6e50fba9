"""Exception types raised across the package."""


class WaveletError(Exception):
    """Base class for all errors raised by mrawave."""


class EmptyFilter(WaveletError, ValueError):
    pass


class NormalizationViolation(WaveletError, ValueError):
    """A scaling filter failed the sum or energy normalization.

    ``invariant`` is ``"sum"`` or ``"energy"``; ``deviation`` is the absolute
    distance from the required value.
    """

    def __init__(self, invariant, deviation, message=None):
        self.invariant = invariant
        self.deviation = float(deviation)
        if message is None:
            target = "sqrt(2)" if invariant == "sum" else "1"
            message = (f"{invariant} normalization violated: off from {target} "
                       f"by {self.deviation:.3e}")
        super().__init__(message)


class FilterNotQMF(WaveletError, ValueError):
    def __init__(self, report):
        self.report = report
        super().__init__(
            f"filter fails the Smith-Barnwell identity: max deviation "
            f"{report.max_deviation:.3e} at xi={report.argmax_xi}")


class NotUnimodular(WaveletError, ValueError):
    def __init__(self, max_deviation):
        self.max_deviation = float(max_deviation)
        super().__init__(f"modulation is not unimodular: max ||nu|-1| = {self.max_deviation:.3e}")


class UnsupportedModulation(WaveletError, ValueError):
    pass


class StepNotUnitDivisor(WaveletError, ValueError):
    pass


class WindowTooSmall(WaveletError, ValueError):
    pass


class NoConvergence(WaveletError, RuntimeError):
    """Cascade iteration did not settle.

    The last iterate and its sup-norm change stay attached for inspection.
    """

    def __init__(self, message, last_iterate, residual, iterations):
        self.last_iterate = last_iterate
        self.residual = float(residual)
        self.iterations = iterations
        super().__init__(message)


class GridMismatch(WaveletError, ValueError):
    pass


class OddLength(WaveletError, ValueError):
    pass


class LengthMismatch(WaveletError, ValueError):
    pass


class TooManyLevels(WaveletError, ValueError):
    pass


class MalformedDecomposition(WaveletError, ValueError):
    pass
