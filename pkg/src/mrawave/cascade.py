"""Time-domain realization of phi and psi on dyadic grids.

The scaling function is obtained by iterating the two-scale relation
``f <- sqrt(2) sum_k alpha_k f(2x - k)`` from the box ``1_[offset, offset+1)``.
On a grid of spacing ``2**-J`` every iterate is evaluated exactly at grid
points (``2x - k`` is again a grid point), so no interpolation is involved.
Inner products use the rectangle rule with the grid spacing.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import FilterNotQMF, GridMismatch, NoConvergence
from .filters import SQRT2, ScalingFilter, WaveletSystem, as_filter, smith_barnwell_check


@dataclass(frozen=True)
class SampledFunction:
    """``values[i]`` approximates ``f(support_start + i * 2**-scale_log2)``.

    ``iterations`` and ``change`` are filled in by :func:`cascade_scaling`.
    """

    support_start: int
    scale_log2: int
    values: np.ndarray
    iterations: int | None = None
    change: float | None = None

    def __post_init__(self):
        vals = np.array(self.values)
        if not np.all(np.isfinite(vals)):
            raise ValueError("sampled values must be finite")
        if self.scale_log2 < 0:
            raise ValueError("scale_log2 must be nonnegative")
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "support_start", int(self.support_start))
        object.__setattr__(self, "scale_log2", int(self.scale_log2))

    @property
    def spacing(self) -> float:
        return 2.0 ** -self.scale_log2

    @property
    def x(self) -> np.ndarray:
        return self.support_start + np.arange(len(self.values)) * self.spacing

    @property
    def support_end(self) -> float:
        return self.support_start + (len(self.values) - 1) * self.spacing

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.values) ** 2) * self.spacing))


def _grid_length(filt: ScalingFilter, scale_log2: int) -> int:
    # a single-tap filter still gets a unit interval so the box fits
    return max(len(filt.coeffs) - 1, 1) * 2**scale_log2 + 1


def _refine(values: np.ndarray, coeffs: np.ndarray, scale_log2: int) -> np.ndarray:
    """One application of ``f <- sqrt(2) sum_j c_j f(2x - j)`` on a grid starting at the filter offset."""
    m = len(values)
    base = 2 * np.arange(m)
    out = np.zeros(m, dtype=np.result_type(values, coeffs))
    for j, c in enumerate(coeffs):
        idx = base - j * 2**scale_log2
        ok = (idx >= 0) & (idx < m)
        out[ok] += SQRT2 * c * values[idx[ok]]
    return out


def _maybe_real(values, filt):
    return values.real.copy() if filt.is_real else values


def cascade_scaling(filt, scale_log2: int = 8, max_iters: int = 100,
                    tol: float = 1e-8) -> SampledFunction:
    """Iterate the two-scale relation until the sup-norm change is at most ``tol``.

    Raises NoConvergence when ``max_iters`` is exhausted, or when the iteration
    settles on a spike of vanishing norm (filters that are not genuine MRA
    filters, e.g. the single tap ``[1/sqrt 2]``).
    """
    filt = as_filter(filt)
    report = smith_barnwell_check(filt)
    if not report.passed:
        raise FilterNotQMF(report)
    if scale_log2 < 1:
        raise ValueError("scale_log2 must be >= 1")
    if max_iters < 1:
        raise ValueError("max_iters must be >= 1")

    m = _grid_length(filt, scale_log2)
    coeffs = np.asarray(filt.coeffs)
    if filt.is_real:
        coeffs = coeffs.real
    f = np.zeros(m, dtype=coeffs.dtype)
    f[: 2**scale_log2] = 1.0

    change = np.inf
    for it in range(1, max_iters + 1):
        nxt = _refine(f, coeffs, scale_log2)
        change = float(np.max(np.abs(nxt - f)))
        f = nxt
        if change <= tol:
            break
    else:
        raise NoConvergence(
            f"cascade did not settle in {max_iters} iterations (last change {change:.3e})",
            SampledFunction(filt.offset, scale_log2, f, max_iters, change), change, max_iters)

    out = SampledFunction(filt.offset, scale_log2, f, it, change)
    if out.norm() ** 2 < 0.5:
        raise NoConvergence(
            f"cascade collapsed to a spike (squared norm {out.norm() ** 2:.3e})",
            out, change, it)
    return out


def two_scale_residual(phi: SampledFunction, filt) -> float:
    """``max_x |phi(x) - sqrt(2) sum_k alpha_k phi(2x - k)|`` over the grid."""
    filt = as_filter(filt)
    if phi.support_start != filt.offset or len(phi.values) != _grid_length(filt, phi.scale_log2):
        raise GridMismatch("phi grid does not match the filter support")
    vals = np.asarray(phi.values)
    return float(np.max(np.abs(vals - _refine(vals, np.asarray(filt.coeffs), phi.scale_log2))))


def realize_wavelet(phi: SampledFunction, system: WaveletSystem) -> SampledFunction:
    """Sample ``psi(x) = sqrt(2) sum_k beta_k phi(2x - k)`` on phi's grid spacing."""
    filt = system.scaling_filter
    if phi.scale_log2 < 1:
        raise GridMismatch("phi must be sampled at scale_log2 >= 1")
    if phi.support_start != filt.offset or len(phi.values) != _grid_length(filt, phi.scale_log2):
        raise GridMismatch("phi grid does not match the scaling filter support")

    J = phi.scale_log2
    a, b = phi.support_start, phi.support_end
    w = system.wavelet_filter
    lo = int(np.floor((a + w.offset) / 2))
    hi = int(np.ceil((b + w.offset + len(w.coeffs) - 1) / 2))
    m = (hi - lo) * 2**J + 1
    vals = np.asarray(phi.values)
    base = 2 * np.arange(m)
    out = np.zeros(m, dtype=np.result_type(vals, w.coeffs))
    for j, c in enumerate(w.coeffs):
        k = w.offset + j
        idx = base + (2 * lo - k - a) * 2**J
        ok = (idx >= 0) & (idx < len(vals))
        out[ok] += SQRT2 * c * vals[idx[ok]]
    if np.isrealobj(vals) and system.wavelet_filter.is_real:
        out = out.real.copy()
    return SampledFunction(lo, J, out)


def cross_gram(f: SampledFunction, g: SampledFunction, shifts: Iterable[int]) -> np.ndarray:
    """``G[i] = sum_x f(x) conj(g(x - shifts[i])) * h`` (rectangle rule)."""
    if f.scale_log2 != g.scale_log2:
        raise GridMismatch("functions live on different dyadic grids")
    J = f.scale_log2
    fv, gv = np.asarray(f.values), np.asarray(g.values)
    i = np.arange(len(fv))
    out = []
    for k in shifts:
        idx = i + (f.support_start - k - g.support_start) * 2**J
        ok = (idx >= 0) & (idx < len(gv))
        out.append(np.sum(fv[ok] * np.conj(gv[idx[ok]])) * f.spacing)
    return np.array(out, dtype=complex)


def translate_gram(f: SampledFunction, shifts: Iterable[int]) -> np.ndarray:
    """Inner products of f with its integer translates ``f(. - k)``."""
    return cross_gram(f, f, shifts)
