"""Frequency-side numerics on uniformly sampled transforms.

"Almost everywhere" statements are checked at every grid point. The grid step
must be ``1/N`` for an integer ``N`` so that integer translates of a sample
location are again sample locations; nothing is interpolated.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import StepNotUnitDivisor, WindowTooSmall
from .filters import WaveletSystem, as_filter, eval_m0, eval_wavelet_symbol
from .reports import CheckReport, argmax_first

DEPTH = 20
WINDOW = 32


def _per_unit(step: float) -> int:
    if not step > 0:
        raise StepNotUnitDivisor(f"step must be positive, got {step}")
    n = round(1.0 / step)
    if n < 1 or abs(1.0 / step - n) > 1e-9 * max(n, 1):
        raise StepNotUnitDivisor(f"1/step = {1.0 / step!r} is not a positive integer")
    return int(n)


@dataclass(frozen=True)
class FourierSamples:
    """``values[i]`` approximates ``g^(window_start + i * step)``."""

    window_start: float
    step: float
    values: np.ndarray

    def __post_init__(self):
        n = _per_unit(self.step)
        vals = np.array(self.values, dtype=complex).reshape(-1)
        if vals.size == 0:
            raise ValueError("FourierSamples needs at least one value")
        vals.setflags(write=False)
        object.__setattr__(self, "step", 1.0 / n)
        object.__setattr__(self, "window_start", float(self.window_start))
        object.__setattr__(self, "values", vals)

    @property
    def per_unit(self) -> int:
        return round(1.0 / self.step)

    @property
    def xi(self) -> np.ndarray:
        return self.window_start + np.arange(len(self.values)) / self.per_unit

    @property
    def window_end(self) -> float:
        return self.window_start + (len(self.values) - 1) / self.per_unit

    @classmethod
    def from_function(cls, func, window_start, step, count):
        n = _per_unit(step)
        xi = window_start + np.arange(count) / n
        return cls(window_start, 1.0 / n, func(xi))


def phi_hat_product(filt, xi, depth: int = DEPTH):
    """``prod_{j=1..depth} m0(xi / 2**j)``, the truncated infinite product for ``phi^``.

    Vectorized over ``xi``. Assumes ``m0(0) = 1``, which makes ``phi^(0) = 1``.
    """
    filt = as_filter(filt)
    xi = np.asarray(xi, dtype=float)
    out = np.ones(xi.shape, dtype=complex)
    for j in range(1, depth + 1):
        out = out * eval_m0(filt, xi / 2.0**j)
    return complex(out) if out.ndim == 0 else out


def psi_hat_product(system: WaveletSystem, xi, depth: int = DEPTH):
    """``psi^(xi) = G(xi/2) phi^(xi/2)`` with phi^ from the truncated product."""
    xi = np.asarray(xi, dtype=float)
    out = eval_wavelet_symbol(system, xi / 2) * phi_hat_product(system.scaling_filter, xi / 2, depth)
    return complex(out) if np.ndim(out) == 0 else out


def sample_phi_hat(filt, window_start: float, step: float, count: int,
                   depth: int = DEPTH) -> FourierSamples:
    n = _per_unit(step)
    xi = window_start + np.arange(count) / n
    return FourierSamples(window_start, 1.0 / n, phi_hat_product(filt, xi, depth))


def sample_psi_hat(system: WaveletSystem, window_start: float, step: float, count: int,
                   depth: int = DEPTH) -> FourierSamples:
    n = _per_unit(step)
    xi = window_start + np.arange(count) / n
    return FourierSamples(window_start, 1.0 / n, psi_hat_product(system, xi, depth))


def periodization(samples: FourierSamples):
    """Return ``(xi0, S)``: residues in [0, 1) and ``sum_k |g^(xi0 + k)|^2`` over the window."""
    n = samples.per_unit
    m = len(samples.values)
    power = np.abs(samples.values) ** 2
    residue = np.arange(m) % n
    # bincount adds in index order, so the summation order is fixed
    total = np.bincount(residue, weights=power, minlength=n)
    present = np.bincount(residue, minlength=n) > 0
    xi0 = np.mod(samples.window_start + np.arange(n) / n, 1.0)
    return xi0[present], total[present]


def lemma1_periodization_check(samples: FourierSamples, tol: float) -> CheckReport:
    """Translates of g are orthonormal iff ``sum_k |g^(xi + k)|^2 = 1``; check it on the grid.

    The sum only runs over translates inside the sample window, so slowly
    decaying transforms carry a truncation error of the order of their tail.
    """
    if samples.window_start > -1.0 + 1e-12 or samples.window_end < 1.0 - 1e-12:
        raise WindowTooSmall(
            f"window [{samples.window_start}, {samples.window_end}] does not span [-1, 1]")
    xi0, total = periodization(samples)
    dev = np.abs(total - 1.0)
    i = argmax_first(dev)
    return CheckReport(
        passed=bool(dev[i] <= tol),
        max_deviation=float(dev[i]),
        argmax_xi=float(xi0[i]),
        params={"check": "lemma1", "tol": float(tol),
                "window": [samples.window_start, samples.window_end],
                "truncation_width": samples.window_end - samples.window_start,
                "step": samples.step},
    )


def support_measure(samples: FourierSamples, threshold: float) -> float:
    """Grid estimate of the measure of ``{|g^| > threshold}`` inside the window."""
    return samples.step * int(np.count_nonzero(np.abs(samples.values) > threshold))


def support_check(samples: FourierSamples, threshold: float, tol: float = 0.0) -> CheckReport:
    """Necessary condition for orthonormal translates: support measure at least 1."""
    measure = support_measure(samples, threshold)
    return CheckReport(
        passed=bool(measure >= 1.0 - tol),
        max_deviation=max(0.0, 1.0 - measure),
        argmax_xi=None,
        params={"check": "support", "measure": measure, "threshold": float(threshold),
                "tol": float(tol), "window": [samples.window_start, samples.window_end]},
    )


def fourier_energy(samples: FourierSamples) -> float:
    """Rectangle-rule ``int |g^|^2`` over the window."""
    return float(np.sum(np.abs(samples.values) ** 2) * samples.step)
