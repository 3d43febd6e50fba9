"""Parameter studies behind the scripts in ``scripts/``.

Each study is a frozen dataclass of knobs with a ``run`` method returning plain rows
(lists of dicts), so scripts can print them and tests can inspect them.
"""
from dataclasses import dataclass, fields
import time

import numpy as np

from .cascade import cascade_scaling, cross_gram, realize_wavelet, translate_gram
from .filters import daubechies4, derive_wavelet, haar
from .fourier import lemma1_periodization_check, sample_phi_hat
from .transform import analyze, synthesize

FILTERS = {"haar": haar, "d4": daubechies4}


def _filter(name):
    try:
        return FILTERS[name]()
    except KeyError:
        raise ValueError(f"unknown filter {name!r}; choose from {sorted(FILTERS)}") from None


@dataclass(frozen=True)
class PeriodizationStudy:
    """Deviation of sum_k |phi^(xi+k)|^2 from 1 over a grid of windows and product depths."""
    filter: str = "haar"
    windows: tuple = (8, 16, 32, 64, 128)
    depths: tuple = (8, 16, 24, 30)
    per_unit: int = 64

    def run(self):
        f = _filter(self.filter)
        rows = []
        for w in self.windows:
            for depth in self.depths:
                s = sample_phi_hat(f, -w, 1 / self.per_unit, 2 * w * self.per_unit + 1, depth)
                rep = lemma1_periodization_check(s, 1.0)
                rows.append({"window": w, "depth": depth, "max_deviation": rep.max_deviation,
                             "argmax_xi": rep.argmax_xi})
        return rows


@dataclass(frozen=True)
class GramStudy:
    """Gram deviations of cascade-realized phi and psi as the grid is refined."""
    filter: str = "d4"
    scales: tuple = (5, 6, 7, 8, 9, 10, 11, 12)
    shifts: int = 3
    max_iters: int = 200
    tol: float = 1e-12

    def run(self):
        f = _filter(self.filter)
        system = derive_wavelet(f, normalize_support=True)
        ks = range(-self.shifts, self.shifts + 1)
        delta = (np.arange(-self.shifts, self.shifts + 1) == 0).astype(float)
        rows = []
        for scale in self.scales:
            phi = cascade_scaling(f, scale, self.max_iters, self.tol)
            psi = realize_wavelet(phi, system)
            rows.append({
                "scale": scale,
                "iterations": phi.iterations,
                "phi_gram": float(np.max(np.abs(translate_gram(phi, ks) - delta))),
                "psi_gram": float(np.max(np.abs(translate_gram(psi, ks) - delta))),
                "cross_gram": float(np.max(np.abs(cross_gram(psi, phi, ks)))),
            })
        return rows


@dataclass(frozen=True)
class ReconstructionTiming:
    """Roundtrip error and wall time of the periodic transform per signal length."""
    filter: str = "d4"
    max_log_length: int = 14
    batch: int = 100
    seed: int = 0

    def run(self):
        system = derive_wavelet(_filter(self.filter), normalize_support=True)
        rng = np.random.default_rng(self.seed)
        rows = []
        for log_n in range(1, self.max_log_length + 1):
            n = 2**log_n
            x = rng.standard_normal((self.batch, n)) + 1j * rng.standard_normal((self.batch, n))
            t0 = time.perf_counter()
            back = synthesize(analyze(x, system, log_n), system)
            rows.append({"length": n, "levels": log_n,
                         "max_error": float(np.max(np.abs(back - x))),
                         "seconds": time.perf_counter() - t0})
        return rows


def add_arguments(parser, config_cls):
    """Expose every dataclass field as a ``--flag`` with the field default."""
    for f in fields(config_cls):
        flag = "--" + f.name.replace("_", "-")
        if isinstance(f.default, tuple):
            kind = type(f.default[0])
            parser.add_argument(flag, type=kind, nargs="+", default=list(f.default))
        else:
            parser.add_argument(flag, type=type(f.default), default=f.default)


def from_namespace(config_cls, ns):
    values = {}
    for f in fields(config_cls):
        v = getattr(ns, f.name)
        values[f.name] = tuple(v) if isinstance(v, list) else v
    return config_cls(**values)
