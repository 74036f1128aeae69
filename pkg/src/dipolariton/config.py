"""Line-oriented ``key = value`` configuration files.

Numeric keys carry their unit in the name (``J_meV``, ``d_nm``,
``g_2pi_GHz``).  Angular rates written as ``<name>_2pi_GHz = f`` mean
2*pi*f GHz and are converted to meV through hbar.  Unknown keys, missing
or wrong unit suffixes and out-of-range values all fail at load time.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path

from .model import InvalidParameterError, SystemParams
from .polariton import RegimeThresholds
from .sweep import Labeling, SweepSpec, default_spec
from .units import DimensionError, Quantity, angular_ghz_to_energy, energy, length


class ConfigError(ValueError):
    def __init__(self, message, line=None, source=None):
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)
        self.line = line


_ENERGY_SUFFIXES = {
    "meV": lambda x: energy(x),
    "ueV": lambda x: Quantity.of(x, "ueV"),
    "eV": lambda x: Quantity.of(x, "eV"),
}
_RATE_SUFFIXES = dict(_ENERGY_SUFFIXES, **{"2pi_GHz": angular_ghz_to_energy})

# parameter name -> accepted unit suffixes
PARAM_KEYS = {
    "omega_c": _ENERGY_SUFFIXES,
    "delta_ix_dx": _ENERGY_SUFFIXES,
    "delta_c_dx": _ENERGY_SUFFIXES,
    "d": {"nm": lambda x: length(x)},
    "J": _ENERGY_SUFFIXES,
    "g": _RATE_SUFFIXES,
    "kappa": _RATE_SUFFIXES,
    "gamma_dx": _RATE_SUFFIXES,
    "gamma_ix": _RATE_SUFFIXES,
}
REQUIRED_PARAMS = ("omega_c", "delta_ix_dx", "delta_c_dx", "d", "J", "g")

# suffixed scalar keys outside SystemParams
FIELD_KEYS = {"F_start": "kVcm", "F_end": "kVcm", "F_halfwidth": "kVcm",
              "edm_high": "nm", "edm_low": "nm"}
PLAIN_KEYS = {"steps", "n", "labeling", "bpd_high", "bpd_low", "out"}


@dataclass(frozen=True)
class Config:
    params: SystemParams
    f_start: float | None = None
    f_end: float | None = None
    f_halfwidth: float = 20.0
    steps: int = 801
    n: int = 1
    labeling: Labeling = Labeling.BOTH
    thresholds: RegimeThresholds | None = None
    out: str | None = None

    def sweep_spec(self) -> SweepSpec:
        if self.f_start is None:
            spec = default_spec(self.params, self.n, self.f_halfwidth, self.steps, self.labeling)
            return spec if self.f_end is None else replace(spec, f_end=self.f_end)
        end = self.f_end if self.f_end is not None else self.f_start + 2 * self.f_halfwidth
        return SweepSpec(self.f_start, end, self.steps, self.n, self.labeling)

    def regime_thresholds(self) -> RegimeThresholds:
        return self.thresholds or RegimeThresholds.default(self.params.d)


def _split_key(key):
    """(base, suffix) for a suffixed key; suffix None when absent."""
    if key in PLAIN_KEYS:
        return key, None
    bases = [b for b in list(PARAM_KEYS) + list(FIELD_KEYS) if key == b or key.startswith(b + "_")]
    if not bases:
        raise KeyError(key)
    base = max(bases, key=len)
    return base, (key[len(base) + 1:] or None)


def _number(text, key, line, source):
    try:
        x = float(text)
    except ValueError:
        raise ConfigError(f"{key}: expected a number, got {text!r}", line, source) from None
    if not math.isfinite(x):
        raise ConfigError(f"{key}: value must be finite", line, source)
    return x


def _integer(text, key, line, source):
    try:
        return int(text)
    except ValueError:
        raise ConfigError(f"{key}: expected an integer, got {text!r}", line, source) from None


def parse_config(text: str, source=None) -> Config:
    params = {}
    extra = {}
    thresholds = {}
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if "=" not in body:
            raise ConfigError(f"expected 'key = value', got {body!r}", lineno, source)
        key, value = (s.strip() for s in body.split("=", 1))
        if not key or not value:
            raise ConfigError(f"expected 'key = value', got {body!r}", lineno, source)
        try:
            base, suffix = _split_key(key)
        except KeyError:
            raise ConfigError(f"unknown key {key!r}", lineno, source) from None
        if base in seen:
            raise ConfigError(f"{base} already set on line {seen[base]}", lineno, source)
        seen[base] = lineno

        if base in PARAM_KEYS:
            allowed = PARAM_KEYS[base]
            if suffix is None:
                raise ConfigError(f"{key!r} needs a unit suffix, one of {sorted(allowed)}", lineno, source)
            if suffix not in allowed:
                raise ConfigError(
                    f"{key!r}: unit {suffix!r} does not fit {base}; use one of {sorted(allowed)}",
                    lineno, source)
            x = _number(value, key, lineno, source)
            try:
                params[base] = allowed[suffix](x)
            except (DimensionError, ValueError) as exc:
                raise ConfigError(f"{key}: {exc}", lineno, source) from None
        elif base in FIELD_KEYS:
            unit = FIELD_KEYS[base]
            if suffix != unit:
                raise ConfigError(f"{key!r}: expected unit suffix _{unit}", lineno, source)
            x = _number(value, key, lineno, source)
            if base.startswith("edm"):
                thresholds[base] = x
            else:
                extra[base.lower()] = x
        elif base in ("steps", "n"):
            extra[base] = _integer(value, key, lineno, source)
        elif base == "labeling":
            try:
                extra[base] = Labeling(value)
            except ValueError:
                raise ConfigError(f"labeling must be energy, tracked or both, got {value!r}",
                                  lineno, source) from None
        elif base in ("bpd_high", "bpd_low"):
            thresholds[base] = _number(value, key, lineno, source)
        elif base == "out":
            extra[base] = value

    missing = [k for k in REQUIRED_PARAMS if k not in params]
    if missing:
        raise ConfigError(f"missing required parameters: {', '.join(missing)}", source=source)
    try:
        sp = SystemParams(**params)
    except InvalidParameterError as exc:
        raise ConfigError(str(exc), source=source) from None

    th = None
    if thresholds:
        base = RegimeThresholds.default(sp.d)
        th = replace(base, **thresholds)
        try:
            th.validate(sp.d)
        except InvalidParameterError as exc:
            raise ConfigError(str(exc), source=source) from None
    cfg = Config(params=sp, thresholds=th, **extra)
    try:
        cfg.sweep_spec()
    except InvalidParameterError as exc:
        raise ConfigError(str(exc), source=source) from None
    return cfg


def load_config(path) -> Config:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}", source=path) from None
    return parse_config(text, source=path)


def default_config_text() -> str:
    return resources.files("dipolariton").joinpath("data/reference.conf").read_text(encoding="utf-8")


def default_config() -> Config:
    return parse_config(default_config_text(), source="<default>")


def config_lines(cfg: Config) -> list[str]:
    """Canonical ``key = value`` lines; parsing them gives back ``cfg``."""
    v = cfg.params.values()
    lines = [
        f"omega_c_meV = {v['omega_c']!r}",
        f"delta_ix_dx_meV = {v['delta_ix_dx']!r}",
        f"delta_c_dx_meV = {v['delta_c_dx']!r}",
        f"d_nm = {v['d']!r}",
        f"J_meV = {v['J']!r}",
        f"g_meV = {v['g']!r}",
        f"kappa_meV = {v['kappa']!r}",
        f"gamma_dx_meV = {v['gamma_dx']!r}",
        f"gamma_ix_meV = {v['gamma_ix']!r}",
    ]
    if cfg.f_start is not None:
        lines.append(f"F_start_kVcm = {cfg.f_start!r}")
    if cfg.f_end is not None:
        lines.append(f"F_end_kVcm = {cfg.f_end!r}")
    lines += [
        f"F_halfwidth_kVcm = {cfg.f_halfwidth!r}",
        f"steps = {cfg.steps}",
        f"n = {cfg.n}",
        f"labeling = {cfg.labeling.value}",
    ]
    if cfg.thresholds is not None:
        t = cfg.thresholds
        lines += [f"bpd_high = {t.bpd_high!r}", f"bpd_low = {t.bpd_low!r}",
                  f"edm_high_nm = {t.edm_high!r}", f"edm_low_nm = {t.edm_low!r}"]
    if cfg.out is not None:
        lines.append(f"out = {cfg.out}")
    return lines
