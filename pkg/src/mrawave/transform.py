"""Orthogonal multilevel decomposition of finite signals with periodic boundaries.

A signal of length ``2**L`` holds the coefficients of a function in ``V_L``.
One analysis step splits it into the ``V_{L-1}`` and ``W_{L-1}`` coefficients:

    a[k] = sum_n conj(alpha_{n-2k}) s[n],    d[k] = sum_n conj(beta_{n-2k}) s[n]

with indices taken modulo the signal length. Synthesis is the adjoint, and
since the 2x2 modulation matrix of the filter pair is unitary, it is also the
inverse. All routines act along the last axis, so a stack of signals can be
transformed in one call.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (LengthMismatch, MalformedDecomposition, OddLength, TooManyLevels)
from .filters import ScalingFilter, WaveletSystem


def _is_pow2(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def _as_signal(signal) -> np.ndarray:
    s = np.asarray(signal)
    if not np.iscomplexobj(s):
        s = s.astype(float)
    return s


def _coeffs(filt: ScalingFilter, real: bool):
    c = np.asarray(filt.coeffs)
    return c.real if real and filt.is_real else c


def _project(s: np.ndarray, filt: ScalingFilter) -> np.ndarray:
    n = s.shape[-1]
    half = np.arange(n // 2)
    c = _coeffs(filt, not np.iscomplexobj(s))
    out = np.zeros(s.shape[:-1] + (n // 2,), dtype=np.result_type(s, c))
    for j, cj in enumerate(c):
        out += np.conj(cj) * s[..., (2 * half + filt.offset + j) % n]
    return out


def _expand(band: np.ndarray, filt: ScalingFilter, out: np.ndarray) -> None:
    n = out.shape[-1]
    half = np.arange(band.shape[-1])
    c = _coeffs(filt, not np.iscomplexobj(out))
    for j, cj in enumerate(c):
        # 2k + const is injective mod n, so fancy-index += does not drop terms
        out[..., (2 * half + filt.offset + j) % n] += cj * band


def analyze_once(signal, system: WaveletSystem):
    """Split a length-2n signal into (approx, detail) bands of length n."""
    s = _as_signal(signal)
    n = s.shape[-1]
    if n < 2 or n % 2:
        raise OddLength(f"signal length must be even and >= 2, got {n}")
    return _project(s, system.scaling_filter), _project(s, system.wavelet_filter)


def synthesize_once(approx, detail, system: WaveletSystem) -> np.ndarray:
    a, d = _as_signal(approx), _as_signal(detail)
    if a.shape != d.shape:
        raise LengthMismatch(f"approx shape {a.shape} != detail shape {d.shape}")
    real = not (np.iscomplexobj(a) or np.iscomplexobj(d))
    dtype = np.result_type(a, d, _coeffs(system.scaling_filter, real),
                           _coeffs(system.wavelet_filter, real))
    out = np.zeros(a.shape[:-1] + (2 * a.shape[-1],), dtype=dtype)
    _expand(a, system.scaling_filter, out)
    _expand(d, system.wavelet_filter, out)
    return out


@dataclass
class Decomposition:
    """Coarsest approximation band plus detail bands stored coarsest first."""

    approx: np.ndarray
    details: list
    levels: int
    system_id: str = ""

    def energies(self) -> list:
        """Band energies ``[approx, coarsest detail, ..., finest detail]``."""
        return [float(np.sum(np.abs(self.approx) ** 2))] + \
            [float(np.sum(np.abs(d) ** 2)) for d in self.details]

    def to_dict(self) -> dict:
        def pairs(v):
            v = np.asarray(v, dtype=complex)
            return [[float(z.real), float(z.imag)] for z in v]
        return {"levels": int(self.levels), "approx": pairs(self.approx),
                "details": [pairs(d) for d in self.details], "system_id": self.system_id}

    @classmethod
    def from_dict(cls, d: dict) -> "Decomposition":
        def arr(rows):
            v = np.array([complex(r[0], r[1]) for r in rows], dtype=complex)
            return v.real.copy() if np.all(v.imag == 0) else v
        return cls(arr(d["approx"]), [arr(b) for b in d["details"]], int(d["levels"]),
                   d.get("system_id", ""))


def analyze(signal, system: WaveletSystem, levels: int) -> Decomposition:
    s = _as_signal(signal)
    n = s.shape[-1]
    if levels < 1:
        raise TooManyLevels(f"levels must be >= 1, got {levels}")
    if n % (2**levels):
        raise TooManyLevels(f"2**{levels} does not divide signal length {n}")
    check_signal_length(s)
    details = []
    a = s
    for _ in range(levels):
        a, d = analyze_once(a, system)
        details.append(d)
    details.reverse()
    return Decomposition(a, details, levels, system.system_id)


def synthesize(decomp: Decomposition, system: WaveletSystem) -> np.ndarray:
    if decomp.levels != len(decomp.details) or decomp.levels < 1:
        raise MalformedDecomposition(
            f"levels={decomp.levels} but {len(decomp.details)} detail bands")
    a = _as_signal(decomp.approx)
    for d in decomp.details:
        d = _as_signal(d)
        if d.shape != a.shape:
            raise MalformedDecomposition(
                f"detail band of shape {d.shape} does not match approx shape {a.shape}")
        a = synthesize_once(a, d, system)
    return a


def check_signal_length(signal) -> int:
    """Return log2 of the length, raising TooManyLevels for non powers of two."""
    n = np.shape(signal)[-1]
    if not _is_pow2(n):
        raise TooManyLevels(f"signal length {n} is not a power of two")
    return n.bit_length() - 1
