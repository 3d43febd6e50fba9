"""Scaling filters, their low-pass symbols, and orthonormal wavelet filters.

Conventions used throughout the package:

* Fourier transform ``f^(xi) = int f(x) exp(-2 pi i x xi) dx``.
* A scaling filter ``alpha`` (indices ``offset .. offset+n-1``) enters the
  two-scale relation ``phi(x) = sqrt(2) sum_k alpha_k phi(2x - k)``, whose
  transform is ``phi^(2 xi) = m0(xi) phi^(xi)`` with the low-pass symbol
  ``m0(xi) = 2**-0.5 * sum_k alpha_k exp(-2 pi i k xi)``.
* The wavelet filter ``beta`` plays the same role for ``psi``:
  ``psi(x) = sqrt(2) sum_k beta_k phi(2x - k)``, symbol ``G`` defined like m0.

Choosing ``G(xi) = exp(2 pi i xi) * conj(m0(xi + 1/2))`` and expanding,

    G(xi) = 2**-0.5 * sum_n conj(alpha_n) (-1)**n exp(2 pi i (n + 1) xi),

so with ``k = -(n + 1)`` the coefficients are
``beta_k = (-1)**(k + 1) * conj(alpha_{-k-1})``.

Multiplying ``psi^`` by a monomial ``nu(xi) = c exp(-2 pi i M xi)`` gives
``psi(x - M)`` scaled by ``c``, i.e. ``G(xi) -> nu(2 xi) G(xi)``: every
coefficient moves by ``2M`` indices.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

from .errors import (EmptyFilter, FilterNotQMF, NormalizationViolation,
                     NotUnimodular, UnsupportedModulation)
from .reports import CheckReport, argmax_first, dumps

SQRT2 = np.sqrt(2.0)
NORM_TOL = 1e-10
CHECK_TOL = 1e-10
GRID_POINTS = 4096


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=complex).reshape(-1)
    arr.setflags(write=False)
    return arr


def _coeffs_to_pairs(coeffs):
    # + 0.0 folds negative zeros so real filters serialize cleanly
    return [[float(c.real) + 0.0, float(c.imag) + 0.0] for c in coeffs]


def _pairs_to_coeffs(pairs):
    out = []
    for p in pairs:
        if isinstance(p, (int, float)):
            out.append(complex(p))
        elif len(p) == 2:
            out.append(complex(float(p[0]), float(p[1])))
        else:
            raise ValueError(f"coefficient entry must be [re, im], got {p!r}")
    return out


@dataclass(frozen=True)
class ScalingFilter:
    """Finitely supported coefficient sequence ``coeffs[j] = alpha_{offset + j}``.

    Building one directly performs no validation; use
    :func:`make_scaling_filter` for a checked, trimmed filter.
    """

    offset: int
    coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "offset", int(self.offset))
        object.__setattr__(self, "coeffs", _frozen(self.coeffs))

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, ScalingFilter):
            return NotImplemented
        return self.offset == other.offset and np.array_equal(self.coeffs, other.coeffs)

    __hash__ = None

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.offset, self.offset + len(self.coeffs))

    @property
    def is_real(self) -> bool:
        return bool(np.all(self.coeffs.imag == 0))

    def to_dict(self) -> dict:
        return {"offset": self.offset, "coeffs": _coeffs_to_pairs(self.coeffs)}

    @classmethod
    def from_dict(cls, d: dict) -> "ScalingFilter":
        return cls(int(d["offset"]), _pairs_to_coeffs(d["coeffs"]))


@dataclass(frozen=True)
class TrigPolynomial:
    """1-periodic ``t(xi) = sum_k c_k exp(-2 pi i k xi)``, ``k = offset, offset+1, ...``."""

    offset: int
    fourier_coeffs: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "offset", int(self.offset))
        object.__setattr__(self, "fourier_coeffs", _frozen(self.fourier_coeffs))

    @classmethod
    def monomial(cls, c: complex = 1.0, shift: int = 0) -> "TrigPolynomial":
        return cls(shift, [c])

    def __call__(self, xi):
        return _eval_series(self.offset, self.fourier_coeffs, xi)


def _eval_series(offset, coeffs, xi):
    """``sum_j coeffs[j] exp(-2 pi i (offset + j) xi)``, xi reduced mod 1 first."""
    xi_arr = np.asarray(xi, dtype=float)
    frac = xi_arr - np.floor(xi_arr)
    k = np.arange(offset, offset + len(coeffs))
    phase = np.exp(-2j * np.pi * np.multiply.outer(frac, k))
    out = phase @ np.asarray(coeffs)
    return complex(out) if np.ndim(out) == 0 else out


def as_filter(obj) -> ScalingFilter:
    """Accept a ScalingFilter, an ``(offset, coeffs)`` pair or a bare sequence at offset 0."""
    if isinstance(obj, ScalingFilter):
        return obj
    if isinstance(obj, tuple) and len(obj) == 2 and np.ndim(obj[0]) == 0 and np.ndim(obj[1]) == 1:
        return ScalingFilter(obj[0], obj[1])
    return ScalingFilter(0, obj)


def _trim(offset, coeffs):
    nz = np.flatnonzero(coeffs != 0)
    if len(nz) == 0:
        return offset, coeffs[:1]
    return offset + int(nz[0]), coeffs[nz[0]:nz[-1] + 1]


def check_normalization(filt: ScalingFilter, norm_tol: float = NORM_TOL) -> None:
    """Raise NormalizationViolation unless sum(alpha) = sqrt 2 and sum |alpha|^2 = 1."""
    dev_sum = abs(np.sum(filt.coeffs) - SQRT2)
    if dev_sum > norm_tol:
        raise NormalizationViolation("sum", dev_sum)
    dev_energy = abs(np.sum(np.abs(filt.coeffs) ** 2) - 1.0)
    if dev_energy > norm_tol:
        raise NormalizationViolation("energy", dev_energy)


def make_scaling_filter(offset: int, coeffs, norm_tol: float = NORM_TOL) -> ScalingFilter:
    coeffs = np.asarray(coeffs, dtype=complex).reshape(-1)
    if coeffs.size == 0:
        raise EmptyFilter("scaling filter needs at least one coefficient")
    offset, coeffs = _trim(int(offset), coeffs)
    filt = ScalingFilter(offset, coeffs)
    check_normalization(filt, norm_tol)
    return filt


def haar() -> ScalingFilter:
    return make_scaling_filter(0, [1 / SQRT2, 1 / SQRT2])


def daubechies4() -> ScalingFilter:
    """Four-tap Daubechies filter (two vanishing moments), closed form."""
    r3 = np.sqrt(3.0)
    c = np.array([1 + r3, 3 + r3, 3 - r3, 1 - r3]) / (4 * SQRT2)
    return make_scaling_filter(0, c)


def eval_m0(filt, xi):
    """Low-pass symbol ``m0(xi)``; accepts scalars or arrays of xi."""
    filt = as_filter(filt)
    out = _eval_series(filt.offset, filt.coeffs, xi)
    return out / SQRT2


def smith_barnwell_check(filt, grid_points: int = GRID_POINTS,
                         tol: float = CHECK_TOL) -> CheckReport:
    """Check ``|m0(xi)|^2 + |m0(xi + 1/2)|^2 = 1`` on ``xi_i = i / grid_points``.

    Works on any coefficient sequence, normalized or not.
    """
    if grid_points < 2:
        raise ValueError("grid_points must be >= 2")
    filt = as_filter(filt)
    xi = np.arange(grid_points) / grid_points
    dev = np.abs(np.abs(eval_m0(filt, xi)) ** 2 + np.abs(eval_m0(filt, xi + 0.5)) ** 2 - 1.0)
    i = argmax_first(dev)
    return CheckReport(
        passed=bool(dev[i] <= tol),
        max_deviation=float(dev[i]),
        argmax_xi=float(xi[i]),
        params={"check": "smith-barnwell", "grid_points": int(grid_points), "tol": float(tol)},
    )


@dataclass(frozen=True)
class Modulation:
    """One applied ``nu(xi) = c exp(-2 pi i shift xi)``; ``source`` says who applied it."""

    c: complex
    shift: int
    source: str = "modulate"

    def to_dict(self):
        return {"c": [float(self.c.real), float(self.c.imag)], "shift": int(self.shift),
                "source": self.source}


@dataclass(frozen=True)
class WaveletSystem:
    scaling_filter: ScalingFilter
    wavelet_filter: ScalingFilter
    provenance: tuple = field(default_factory=tuple)

    @property
    def system_id(self) -> str:
        payload = dumps({"scaling": self.scaling_filter.to_dict(),
                         "wavelet": self.wavelet_filter.to_dict()})
        return "wsys-" + hashlib.sha1(payload.encode()).hexdigest()[:12]

    def to_dict(self) -> dict:
        d = self.wavelet_filter.to_dict()
        d["scaling_filter"] = self.scaling_filter.to_dict()
        d["provenance"] = [m.to_dict() for m in self.provenance]
        d["system_id"] = self.system_id
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "WaveletSystem":
        prov = tuple(
            Modulation(complex(*m["c"]), int(m["shift"]), m.get("source", "modulate"))
            for m in d.get("provenance", []))
        return cls(ScalingFilter.from_dict(d["scaling_filter"]),
                   ScalingFilter.from_dict(d), prov)


def eval_wavelet_symbol(system: WaveletSystem, xi):
    """Symbol ``G`` of the wavelet filter, normalized like m0."""
    w = system.wavelet_filter
    return _eval_series(w.offset, w.coeffs, xi) / SQRT2


def _apply_monomial(filt: ScalingFilter, c: complex, shift: int) -> ScalingFilter:
    return ScalingFilter(filt.offset + 2 * shift, c * filt.coeffs)


def derive_wavelet(filt: ScalingFilter, normalize_support: bool = False) -> WaveletSystem:
    """Wavelet filter with symbol ``exp(2 pi i xi) conj(m0(xi + 1/2))``.

    With ``normalize_support`` the result is further modulated by
    ``+-exp(-2 pi i M xi)`` so the filter starts at index 0 (index 1 when the
    raw start is odd, as only even index shifts are reachable) and its first
    coefficient has nonnegative real part.
    """
    report = smith_barnwell_check(filt)
    if not report.passed:
        raise FilterNotQMF(report)
    check_normalization(filt)
    n = len(filt.coeffs)
    # beta_k for k = -offset-n .. -offset-1, i.e. alpha read backwards
    k = np.arange(-filt.offset - n, -filt.offset)
    sign = np.where((k + 1) % 2 == 0, 1.0, -1.0)
    beta = sign * np.conj(filt.coeffs[::-1])
    if filt.is_real:
        beta = beta.real
    system = WaveletSystem(filt, ScalingFilter(int(k[0]), beta), ())
    if not normalize_support:
        return system

    shift = -(system.wavelet_filter.offset // 2)
    moved = _apply_monomial(system.wavelet_filter, 1.0, shift)
    c = -1.0 if moved.coeffs[0].real < 0 else 1.0
    return WaveletSystem(filt, _apply_monomial(moved, c, 0),
                         (Modulation(complex(c), shift, "normalize_support"),))


def modulate(system: WaveletSystem, nu: TrigPolynomial, grid_points: int = GRID_POINTS,
             tol: float = CHECK_TOL) -> WaveletSystem:
    """Replace ``psi^(xi)`` by ``nu(xi) psi^(xi)`` for a unimodular monomial ``nu``."""
    xi = np.arange(grid_points) / grid_points
    dev = float(np.max(np.abs(np.abs(nu(xi)) - 1.0)))
    if dev > tol:
        raise NotUnimodular(dev)
    offset, coeffs = _trim(nu.offset, np.asarray(nu.fourier_coeffs))
    mags = np.abs(coeffs)
    significant = np.flatnonzero(mags > 64 * np.finfo(float).eps * mags.max())
    if len(significant) != 1:
        raise UnsupportedModulation(
            "only monomials c*exp(-2 pi i M xi) keep the wavelet filter finite; "
            f"got {len(significant)} significant Fourier coefficients")
    j = int(significant[0])
    c, shift = complex(coeffs[j]), offset + j
    return WaveletSystem(system.scaling_filter,
                         _apply_monomial(system.wavelet_filter, c, shift),
                         system.provenance + (Modulation(c, shift),))


def modulation_matrix_check(system: WaveletSystem, grid_points: int = GRID_POINTS,
                            tol: float = CHECK_TOL) -> CheckReport:
    """Check that ``[[m0(xi), m0(xi+1/2)], [G(xi), G(xi+1/2)]]`` is unitary on the grid.

    G is evaluated from the stored wavelet coefficients, not rebuilt from m0.
    """
    xi = np.arange(grid_points) / grid_points
    a0, a1 = eval_m0(system.scaling_filter, xi), eval_m0(system.scaling_filter, xi + 0.5)
    g0, g1 = eval_wavelet_symbol(system, xi), eval_wavelet_symbol(system, xi + 0.5)
    mat = np.stack([np.stack([a0, a1], -1), np.stack([g0, g1], -1)], -2)
    gram = mat @ np.conj(np.swapaxes(mat, -1, -2))
    dev = np.max(np.abs(gram - np.eye(2)), axis=(-1, -2))
    i = argmax_first(dev)
    return CheckReport(
        passed=bool(dev[i] <= tol),
        max_deviation=float(dev[i]),
        argmax_xi=float(xi[i]),
        params={"check": "modulation-matrix", "grid_points": int(grid_points), "tol": float(tol)},
    )
