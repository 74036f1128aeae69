"""CSV serialisation of sweep rows.

Layout: ``#`` metadata lines, one header line, one line per field value.
Column groups per branch label L in (LP, MP, UP), energy-ordered first
and then, prefixed ``trk_``, adiabatically tracked:

    E_L_meV, ImE_L_meV          branch energies       (spectrum)
    fIX_L, fDX_L, fC_L          |C|^2 fractions       (branch content)
    BPD_L, EDM_L_nm             brightness, dipole
    Gamma_L_GHz, tau_L_ps       decay rate, lifetime
    regime_L                    classifier tag (threshold dependent)
"""
from __future__ import annotations

import csv
import math
from pathlib import Path

from . import __version__
from .spectral import LABELS

FLOAT_FORMAT = "{:.12g}"
PLOT_MAP = (
    "spectrum -> F_kVcm vs E_{LP,MP,UP}_meV",
    "content -> F_kVcm vs f{IX,DX,C}_{LP,MP,UP}",
    "brightness/dipole -> F_kVcm vs BPD_{LP,MP,UP}, EDM_{LP,MP,UP}_nm",
    "decay -> F_kVcm vs Gamma_{LP,MP,UP}_GHz, tau_{LP,MP,UP}_ps",
)


def fmt(x: float) -> str:
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if x == 0.0:
        return "0"  # also folds -0.0
    return FLOAT_FORMAT.format(x)


def _branch_columns(prefix, label):
    return [f"{prefix}{c}" for c in (
        f"E_{label}_meV", f"ImE_{label}_meV", f"fIX_{label}", f"fDX_{label}", f"fC_{label}",
        f"BPD_{label}", f"EDM_{label}_nm", f"Gamma_{label}_GHz", f"tau_{label}_ps", f"regime_{label}",
    )]


def _branch_values(rec):
    return [
        fmt(rec.energy.real), fmt(rec.energy.imag), *(fmt(f) for f in rec.fractions),
        fmt(rec.bpd), fmt(rec.edm_nm), fmt(rec.gamma_ghz), fmt(rec.tau_ps), rec.regime,
    ]


def columns(rows) -> list[str]:
    first = rows[0]
    cols = ["F_kVcm"]
    if first.energy_ordered is not None:
        for lab in LABELS:
            cols += _branch_columns("", lab)
    if first.tracked is not None:
        for lab in LABELS:
            cols += _branch_columns("trk_", lab)
        cols += ["trk_overlap", "trk_min_overlap"]
    return cols


def row_values(row) -> list[str]:
    vals = [fmt(row.F)]
    if row.energy_ordered is not None:
        for lab in LABELS:
            vals += _branch_values(row.energy_ordered[lab])
    if row.tracked is not None:
        for lab in LABELS:
            vals += _branch_values(row.tracked[lab])
        vals += [fmt(row.total_overlap), fmt(row.min_overlap)]
    return vals


def metadata_lines(config_lines=(), labeling="both", mode="effective") -> list[str]:
    lines = [
        f"dipolariton {__version__}",
        f"mode = {mode}",
        f"labeling policy = {labeling}",
        "basis order = IX, DX, C (photon); energies in meV, Gamma in GHz (1e9/s), tau in ps",
        *PLOT_MAP,
        "config:",
    ]
    return lines + [f"  {c}" for c in config_lines]


def emit_csv(rows, path, meta=()) -> None:
    """Write ``rows`` to ``path``; ``meta`` lines become ``#`` comments."""
    if not rows:
        raise ValueError("no rows to write")
    path = Path(path)
    try:
        with path.open("w", encoding="utf-8", newline="") as fh:
            for line in meta:
                fh.write(f"# {line}\n")
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(columns(rows))
            for row in rows:
                w.writerow(row_values(row))
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def read_csv(path) -> tuple[list[str], list[dict]]:
    """Metadata lines and data rows (as str dicts) of a file from :func:`emit_csv`."""
    meta, body = [], []
    with Path(path).open(encoding="utf-8", newline="") as fh:
        for line in fh:
            if line.startswith("#"):
                meta.append(line[2:].rstrip("\n") if line.startswith("# ") else line[1:].rstrip("\n"))
            else:
                body.append(line)
    return meta, list(csv.DictReader(body))


def config_echo(meta) -> str:
    """The config block of the metadata, as parseable ``key = value`` text."""
    if "config:" not in meta:
        return ""
    return "\n".join(line.strip() for line in meta[meta.index("config:") + 1:]) + "\n"
