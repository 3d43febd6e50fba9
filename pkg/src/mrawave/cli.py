"""Command-line interface.

Exit codes: 0 success or passing check, 1 a check ran and failed, 2 bad usage
or input. Reports go to stdout as JSON; data products go to the files named
by ``--out``.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import cascade as cas
from . import fourier, io, transform
from .errors import NoConvergence, WaveletError
from .filters import CHECK_TOL, GRID_POINTS, derive_wavelet, smith_barnwell_check
from .reports import CheckReport, argmax_first, dumps

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(dumps(obj) + "\n")


def _positive(kind):
    def parse(text):
        value = kind(text)
        if value <= 0:
            raise argparse.ArgumentTypeError(f"must be positive, got {text}")
        return value
    return parse


def _report_exit(report: CheckReport) -> int:
    _emit(report.to_dict())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_derive(args) -> int:
    filt = io.read_filter(args.filter)
    system = derive_wavelet(filt, normalize_support=args.normalize_support)
    if args.out:
        io.write_system(args.out, system)
    _emit({"system_id": system.system_id,
           "offset": system.wavelet_filter.offset,
           "coeffs": system.to_dict()["coeffs"],
           "provenance": [m.to_dict() for m in system.provenance],
           "out": args.out})
    return EXIT_OK


def _fourier_samples(args, psi=False):
    if args.samples:
        return io.read_samples_csv(args.samples)
    if not args.filter:
        raise UsageError("need --samples or --filter")
    n, w = args.per_unit, args.window
    count = 2 * w * n + 1
    if psi:
        system = derive_wavelet(io.read_filter(args.filter), normalize_support=True)
        return fourier.sample_psi_hat(system, -w, 1.0 / n, count, args.depth)
    return fourier.sample_phi_hat(io.read_filter(args.filter), -w, 1.0 / n, count, args.depth)


def cmd_check(args) -> int:
    if args.subcheck == "smith-barnwell":
        filt = io.read_filter(args.filter)
        return _report_exit(smith_barnwell_check(filt, args.grid, args.tol))

    if args.subcheck == "lemma1":
        samples = _fourier_samples(args)
        report = fourier.lemma1_periodization_check(samples, args.tol)
        report.params.update({"depth": args.depth if not args.samples else None})
        return _report_exit(report)

    if args.subcheck == "support":
        samples = _fourier_samples(args, psi=args.psi)
        return _report_exit(fourier.support_check(samples, args.threshold, args.tol))

    # gram
    filt = io.read_filter(args.filter)
    phi = cas.cascade_scaling(filt, args.scale, args.iters, args.cascade_tol)
    shifts = list(range(-args.shifts, args.shifts + 1))
    delta = np.array([1.0 if k == 0 else 0.0 for k in shifts])
    if args.target == "phi":
        gram, expected = cas.translate_gram(phi, shifts), delta
    else:
        psi = cas.realize_wavelet(phi, derive_wavelet(filt, normalize_support=True))
        if args.target == "psi":
            gram, expected = cas.translate_gram(psi, shifts), delta
        else:
            gram, expected = cas.cross_gram(psi, phi, shifts), np.zeros(len(shifts))
    dev = np.abs(gram - expected)
    i = argmax_first(dev)
    report = CheckReport(bool(dev[i] <= args.tol), float(dev[i]), None,
                         {"check": "gram", "target": args.target, "scale_log2": args.scale,
                          "tol": args.tol, "argmax_shift": shifts[i],
                          "gram": [[float(g.real), float(g.imag)] for g in gram]})
    return _report_exit(report)


def cmd_cascade(args) -> int:
    filt = io.read_filter(args.filter)
    try:
        phi = cas.cascade_scaling(filt, args.scale, args.iters, args.tol)
    except NoConvergence as exc:
        _emit({"converged": False, "iterations": exc.iterations, "change": exc.residual,
               "message": str(exc)})
        return EXIT_FAIL
    if args.out:
        io.write_sampled_function(args.out, phi)
    _emit({"converged": True, "iterations": phi.iterations, "change": phi.change,
           "support_start": phi.support_start, "scale_log2": phi.scale_log2,
           "points": len(phi.values), "norm": phi.norm(),
           "two_scale_residual": cas.two_scale_residual(phi, filt), "out": args.out})
    return EXIT_OK


def cmd_realize_wavelet(args) -> int:
    phi = io.read_sampled_function(args.phi)
    system = io.read_system(args.system)
    psi = cas.realize_wavelet(phi, system)
    if args.out:
        io.write_sampled_function(args.out, psi)
    _emit({"system_id": system.system_id, "support_start": psi.support_start,
           "scale_log2": psi.scale_log2, "points": len(psi.values), "norm": psi.norm(),
           "out": args.out})
    return EXIT_OK


def cmd_dwt(args) -> int:
    signal = io.read_signal_csv(args.signal)
    system = io.read_system(args.system)
    dec = transform.analyze(signal, system, args.levels)
    if args.out:
        io.write_decomposition(args.out, dec)
    energies = dec.energies()
    _emit({"system_id": system.system_id, "levels": dec.levels,
           "band_energies": energies,
           "energy_defect": abs(sum(energies) - float(np.sum(np.abs(signal) ** 2))),
           "out": args.out})
    return EXIT_OK


def cmd_idwt(args) -> int:
    dec = io.read_decomposition(args.decomposition)
    system = io.read_system(args.system)
    signal = transform.synthesize(dec, system)
    if np.iscomplexobj(signal) and np.all(signal.imag == 0):
        signal = signal.real
    if args.out:
        io.write_signal_csv(args.out, signal)
    report = {"system_id": system.system_id, "length": int(signal.shape[-1]), "out": args.out}
    if args.reference:
        ref = io.read_signal_csv(args.reference)
        if ref.shape != signal.shape:
            raise UsageError(f"reference length {ref.shape[-1]} != {signal.shape[-1]}")
        report["max_abs_diff"] = float(np.max(np.abs(signal - ref)))
    _emit(report)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mrawave", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("derive", help="derive the orthonormal wavelet filter of a scaling filter")
    d.add_argument("filter")
    d.add_argument("--normalize-support", action=argparse.BooleanOptionalAction, default=True,
                   help="shift/sign-normalize the wavelet filter (default: on)")
    d.add_argument("--out")
    d.set_defaults(func=cmd_derive)

    c = sub.add_parser("check", help="run one orthonormality check")
    csub = c.add_subparsers(dest="subcheck", required=True)

    sb = csub.add_parser("smith-barnwell", help="|m0(xi)|^2 + |m0(xi+1/2)|^2 = 1 on a grid")
    sb.add_argument("filter")
    sb.add_argument("--grid", type=_positive(int), default=GRID_POINTS)
    sb.add_argument("--tol", type=_positive(float), default=CHECK_TOL)

    for name, help_text in [("lemma1", "periodization sum of |g^|^2 equals 1"),
                            ("support", "support measure of g^ is at least 1")]:
        q = csub.add_parser(name, help=help_text)
        src = q.add_mutually_exclusive_group(required=True)
        src.add_argument("--samples", help="Fourier samples CSV (xi,re,im)")
        src.add_argument("--filter", help="scaling filter JSON; phi^ is sampled from it")
        q.add_argument("--window", type=_positive(int), default=fourier.WINDOW,
                       help="sample phi^ on [-window, window]")
        q.add_argument("--per-unit", type=_positive(int), default=64,
                       help="samples per unit frequency (step = 1/per_unit)")
        q.add_argument("--depth", type=_positive(int), default=fourier.DEPTH)
        if name == "lemma1":
            q.add_argument("--tol", type=_positive(float), default=CHECK_TOL)
        else:
            q.add_argument("--threshold", type=_positive(float), default=1e-8)
            q.add_argument("--tol", type=float, default=0.0,
                           help="pass when measure >= 1 - tol")
            q.add_argument("--psi", action="store_true",
                           help="with --filter, sample psi^ instead of phi^")

    g = csub.add_parser("gram", help="inner products of cascade-realized translates")
    g.add_argument("filter")
    g.add_argument("--target", choices=["phi", "psi", "cross"], default="phi")
    g.add_argument("--scale", type=_positive(int), default=8)
    g.add_argument("--shifts", type=int, default=3, help="check shifts -n..n")
    g.add_argument("--iters", type=_positive(int), default=200)
    g.add_argument("--cascade-tol", type=_positive(float), default=1e-10)
    g.add_argument("--tol", type=_positive(float), default=1e-4)
    c.set_defaults(func=cmd_check)

    k = sub.add_parser("cascade", help="sample the scaling function on a dyadic grid")
    k.add_argument("filter")
    k.add_argument("--scale", type=_positive(int), default=8)
    k.add_argument("--iters", type=_positive(int), default=100)
    k.add_argument("--tol", type=_positive(float), default=1e-8)
    k.add_argument("--out")
    k.set_defaults(func=cmd_cascade)

    r = sub.add_parser("realize-wavelet", help="sample psi from sampled phi and a wavelet system")
    r.add_argument("--phi", required=True, help="phi CSV written by `cascade`")
    r.add_argument("--system", required=True, help="wavelet system JSON written by `derive`")
    r.add_argument("--out")
    r.set_defaults(func=cmd_realize_wavelet)

    w = sub.add_parser("dwt", help="multilevel analysis of a signal CSV")
    w.add_argument("signal")
    w.add_argument("system")
    w.add_argument("--levels", type=_positive(int), required=True)
    w.add_argument("--out")
    w.set_defaults(func=cmd_dwt)

    iw = sub.add_parser("idwt", help="synthesis of a decomposition JSON")
    iw.add_argument("decomposition")
    iw.add_argument("system")
    iw.add_argument("--out")
    iw.add_argument("--reference", help="signal CSV to compare the reconstruction against")
    iw.set_defaults(func=cmd_idwt)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (WaveletError, UsageError, OSError, ValueError, KeyError, TypeError,
            json.JSONDecodeError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
