"""Command-line entry point.

Exit codes: 0 success, 1 usage or configuration error, 2 numerical failure
(eigensolver failure or a failed validation check).
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

import numpy as np

from . import __version__, checks
from .config import ConfigError, config_lines, default_config, load_config
from .model import BASIS_LABELS, InvalidParameterError, build_effective, build_hermitian
from .output import emit_csv, fmt, metadata_lines
from .polariton import ModelViolationError, classify_regime, hopfield, observables
from .spectral import LABELS, NumericalError, eig3, energy_ordered
from .sweep import Labeling, run_sweep
from .units import DimensionError

EXIT_OK, EXIT_USAGE, EXIT_NUMERICAL = 0, 1, 2
DEFAULT_OUT = "dipolariton_sweep.csv"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_config(p):
    p.add_argument("--config", metavar="PATH", help="parameter file (default: shipped reference set)")


def _add_mode(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--effective", dest="effective", action="store_true", default=True,
                   help="lossy effective Hamiltonian (default)")
    g.add_argument("--hermitian", dest="effective", action="store_false",
                   help="closed-system Hamiltonian, no decay")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dipolariton", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sw = sub.add_parser("sweep", help="bias sweep to CSV")
    _add_config(sw)
    _add_mode(sw)
    sw.add_argument("--out", metavar="PATH", help=f"CSV path (default: config 'out' or {DEFAULT_OUT})")
    sw.add_argument("--outdir", metavar="DIR", help="directory for relative output paths")
    sw.add_argument("--labeling", choices=[x.value for x in Labeling], help="override config labeling")
    sw.add_argument("--workers", type=int, default=1, help="processes for row computation")

    rs = sub.add_parser("resonance", help="closed-form and numeric tunneling resonance")
    _add_config(rs)

    ei = sub.add_parser("eigen", help="full diagnostic at one bias value")
    _add_config(ei)
    _add_mode(ei)
    ei.add_argument("--f", type=float, required=True, metavar="VALUE", help="bias field, kV/cm")
    ei.add_argument("--n", type=int, help="rung index (default: config n)")

    va = sub.add_parser("validate", help="run built-in invariant checks")
    _add_config(va)
    return parser


def _config(args):
    return load_config(args.config) if args.config else default_config()


def _sweep(args, out):
    cfg = _config(args)
    if args.workers < 1:
        raise UsageError("--workers must be >= 1")
    if args.labeling:
        cfg = replace(cfg, labeling=Labeling(args.labeling))
    path = Path(args.out or cfg.out or DEFAULT_OUT)
    if args.outdir and not path.is_absolute():
        path = Path(args.outdir) / path
    rows = run_sweep(cfg.params, cfg.sweep_spec(), effective=args.effective,
                     thresholds=cfg.regime_thresholds(), workers=args.workers)
    meta = metadata_lines(config_lines(cfg), cfg.labeling.value,
                          "effective" if args.effective else "hermitian")
    emit_csv(rows, path, meta)
    print(f"wrote {len(rows)} rows to {path}", file=out)


def _resonance(args, out):
    print(checks.resonance_report(_config(args).params), file=out)


def _eigen(args, out):
    cfg = _config(args)
    n = args.n if args.n is not None else cfg.n
    build = build_effective if args.effective else build_hermitian
    H = build(cfg.params, n, args.f)
    print(f"F = {fmt(args.f)} kV/cm, n = {n}, {'effective' if args.effective else 'hermitian'}", file=out)
    print("matrix (meV), basis " + ", ".join(BASIS_LABELS) + ":", file=out)
    with np.printoptions(precision=9, suppress=False, linewidth=120):
        print(H.entries, file=out)
    thresholds = cfg.regime_thresholds()
    for label, e in zip(LABELS, energy_ordered(eig3(H))):
        b = hopfield(e, label)
        obs = observables(e, cfg.params.d)
        f_ix, f_dx, f_c = b.fractions
        print(f"{label}: E = {fmt(e.value.real)} {fmt(e.value.imag)}i meV  residual = {e.residual:.2e}"
              f"{'  NEAR EXCEPTIONAL POINT' if e.near_exceptional else ''}", file=out)
        print(f"    |C|^2 IX/DX/C = {fmt(f_ix)} / {fmt(f_dx)} / {fmt(f_c)}", file=out)
        print(f"    BPD = {fmt(obs.bpd)}  EDM = {fmt(obs.edm.value)} nm  Gamma = {fmt(obs.gamma.to('GHz'))} GHz"
              f"  tau = {fmt(obs.tau.value)} ps  regime = {classify_regime(obs, thresholds).value}", file=out)


def _validate(args, out):
    results = checks.run_all(_config(args).params)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}", file=out)
    return EXIT_OK if all(r.passed for r in results) else EXIT_NUMERICAL


COMMANDS = {"sweep": _sweep, "resonance": _resonance, "eigen": _eigen, "validate": _validate}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out) or EXIT_OK
    except (ConfigError, UsageError, InvalidParameterError, DimensionError) as exc:
        print(f"dipolariton: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericalError, ModelViolationError) as exc:
        print(f"dipolariton: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"dipolariton: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
