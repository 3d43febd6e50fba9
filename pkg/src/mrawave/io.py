"""Readers and writers for the JSON and CSV file formats.

* filter JSON: ``{"offset": int, "coeffs": [[re, im], ...]}``
* wavelet system JSON: the wavelet filter in filter layout plus
  ``scaling_filter``, ``provenance`` and ``system_id``
* Fourier samples CSV: ``xi,re,im``
* sampled function CSV: ``x,re,im`` with a ``.json`` sidecar holding
  ``support_start`` and ``scale_log2``
* signal CSV: ``re,im``
* decomposition JSON: ``levels``, ``approx``, ``details`` (coarsest first), ``system_id``
"""
from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .cascade import SampledFunction
from .filters import (ScalingFilter, WaveletSystem, check_normalization, derive_wavelet,
                      make_scaling_filter)
from .fourier import FourierSamples
from .reports import dumps, format_float
from .transform import Decomposition


def _write_text(path, text):
    Path(path).write_text(text + "\n")


def read_filter(path, norm_tol: float = 1e-10) -> ScalingFilter:
    d = json.loads(Path(path).read_text())
    raw = ScalingFilter.from_dict(d)
    return make_scaling_filter(raw.offset, raw.coeffs, norm_tol)


def write_filter(path, filt: ScalingFilter) -> None:
    _write_text(path, dumps(filt.to_dict()))


def read_system(path) -> WaveletSystem:
    """Load a wavelet system; a bare scaling filter file is derived on the fly."""
    d = json.loads(Path(path).read_text())
    if "scaling_filter" not in d:
        raw = ScalingFilter.from_dict(d)
        return derive_wavelet(make_scaling_filter(raw.offset, raw.coeffs), normalize_support=True)
    system = WaveletSystem.from_dict(d)
    check_normalization(system.scaling_filter)
    return system


def write_system(path, system: WaveletSystem) -> None:
    _write_text(path, dumps(system.to_dict()))


def _rows(path, header):
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        first = next(reader, None)
        if first is None or [h.strip() for h in first] != header:
            raise ValueError(f"{path}: expected header {','.join(header)}, got {first}")
        rows = [[float(v) for v in row] for row in reader if row]
    for row in rows:
        if len(row) != len(header):
            raise ValueError(f"{path}: row {row} does not match header {header}")
    return np.array(rows, dtype=float).reshape(-1, len(header))


def _write_rows(path, header, columns):
    with open(path, "w", newline="") as fh:
        fh.write(",".join(header) + "\n")
        for row in zip(*columns):
            fh.write(",".join(format_float(v) for v in row) + "\n")


def read_samples_csv(path) -> FourierSamples:
    data = _rows(path, ["xi", "re", "im"])
    if len(data) == 0:
        raise ValueError(f"{path}: no samples")
    xi = data[:, 0]
    if len(xi) > 1:
        steps = np.diff(xi)
        step = float(np.mean(steps))
        if np.max(np.abs(steps - step)) > 1e-9:
            raise ValueError(f"{path}: xi is not uniformly spaced")
    else:
        step = 1.0
    return FourierSamples(xi[0], step, data[:, 1] + 1j * data[:, 2])


def write_samples_csv(path, samples: FourierSamples) -> None:
    v = np.asarray(samples.values, dtype=complex)
    _write_rows(path, ["xi", "re", "im"], [samples.xi, v.real, v.imag])


def sidecar_path(csv_path) -> Path:
    return Path(csv_path).with_suffix(".json")


def read_sampled_function(path) -> SampledFunction:
    meta = json.loads(sidecar_path(path).read_text())
    data = _rows(path, ["x", "re", "im"])
    values = data[:, 1] + 1j * data[:, 2]
    if np.all(data[:, 2] == 0):
        values = data[:, 1]
    return SampledFunction(int(meta["support_start"]), int(meta["scale_log2"]), values)


def write_sampled_function(path, f: SampledFunction) -> None:
    v = np.asarray(f.values, dtype=complex)
    _write_rows(path, ["x", "re", "im"], [f.x, v.real, v.imag])
    _write_text(sidecar_path(path),
                dumps({"support_start": f.support_start, "scale_log2": f.scale_log2}))


def read_signal_csv(path) -> np.ndarray:
    data = _rows(path, ["re", "im"])
    if np.all(data[:, 1] == 0):
        return data[:, 0].copy()
    return data[:, 0] + 1j * data[:, 1]


def write_signal_csv(path, signal) -> None:
    v = np.asarray(signal, dtype=complex)
    _write_rows(path, ["re", "im"], [v.real, v.imag])


def read_decomposition(path) -> Decomposition:
    return Decomposition.from_dict(json.loads(Path(path).read_text()))


def write_decomposition(path, decomp: Decomposition) -> None:
    _write_text(path, dumps(decomp.to_dict()))
