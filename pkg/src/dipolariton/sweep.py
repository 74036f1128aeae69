"""Bias-field sweeps, resonance location and anticrossing gaps."""
from __future__ import annotations

import enum
import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

import numpy as np

from .model import InvalidParameterError, SystemParams, build_effective, build_hermitian
from .polariton import RegimeThresholds, classify_regime, observables
from .spectral import LABELS, BranchSet, NumericalError, eig3, eigenvalues3, energy_ordered, track_branches
from .units import Dimension, Quantity, energy, energy_to_bias, field, magnitude

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


class Labeling(enum.Enum):
    ENERGY = "energy"
    TRACKED = "tracked"
    BOTH = "both"


class SweepError(NumericalError):
    def __init__(self, F, residual, cause=""):
        super().__init__(f"eigensolver failed at F = {F!r} kV/cm: {cause}", residual)
        self.F = F


class BoundaryMinimumWarning(UserWarning):
    pass


@dataclass(frozen=True)
class SweepSpec:
    f_start: float
    f_end: float
    steps: int = 801
    n: int = 1
    labeling: Labeling = Labeling.BOTH

    def __post_init__(self):
        object.__setattr__(self, "f_start", magnitude(self.f_start, Dimension.FIELD))
        object.__setattr__(self, "f_end", magnitude(self.f_end, Dimension.FIELD))
        object.__setattr__(self, "labeling", Labeling(self.labeling))
        if int(self.steps) != self.steps or self.steps < 2:
            raise InvalidParameterError(f"steps must be an integer >= 2, got {self.steps}")
        if self.f_start == self.f_end:
            raise InvalidParameterError("f_start and f_end must differ")
        if int(self.n) != self.n or self.n < 1:
            raise InvalidParameterError(f"rung index must be >= 1, got {self.n}")

    def grid(self) -> np.ndarray:
        return np.linspace(self.f_start, self.f_end, int(self.steps))


@dataclass(frozen=True)
class BranchRecord:
    label: str
    energy: complex
    fractions: tuple
    bpd: float
    edm_nm: float
    gamma_ghz: float
    tau_ps: float
    regime: str


@dataclass
class SweepRow:
    F: float
    energy_ordered: dict | None = None
    tracked: dict | None = None
    total_overlap: float = float("nan")
    min_overlap: float = float("nan")
    pairs: list = dc_field(default_factory=list, repr=False)


@dataclass(frozen=True)
class GapResult:
    field: Quantity
    gap: Quantity
    boundary: bool = False


@dataclass(frozen=True)
class ResonanceResult:
    closed_form: Quantity
    numeric: Quantity
    numeric_gap: Quantity


def default_spec(p: SystemParams, n: int = 1, half_width: float = 20.0, steps: int = 801,
                 labeling=Labeling.BOTH) -> SweepSpec:
    """Window of +-half_width kV/cm around the tunneling resonance."""
    f0 = resonance_field(p).value
    return SweepSpec(f0 - half_width, f0 + half_width, steps, n, labeling)


def _matrix(p, n, F, effective):
    return build_effective(p, n, F) if effective else build_hermitian(p, n, F)


def _solve_point(args):
    p, n, F, effective = args
    try:
        return eig3(_matrix(p, n, F, effective))
    except NumericalError as exc:
        raise SweepError(F, exc.residual, str(exc)) from exc


def _record(label, pair, p, thresholds, effective):
    obs = observables(pair, p.d)
    gamma = obs.gamma.to("GHz") if effective else 0.0
    return BranchRecord(
        label=label,
        energy=pair.value,
        fractions=obs.fractions,
        bpd=obs.bpd,
        edm_nm=obs.edm.value,
        gamma_ghz=gamma,
        tau_ps=obs.tau.value if effective else math.inf,
        regime=classify_regime(obs, thresholds).value,
    )


def _records(branches: BranchSet, p, thresholds, effective):
    return {lab: _record(lab, e, p, thresholds, effective) for lab, e in zip(LABELS, branches)}


def run_sweep(p: SystemParams, spec: SweepSpec, effective: bool = True,
              thresholds: RegimeThresholds | None = None, workers: int = 1) -> list[SweepRow]:
    """Solve every grid point of ``spec`` and attach branch observables.

    Points are solved independently (optionally in ``workers`` processes);
    labelling and tracking then run over the rows in axis order, so the
    result does not depend on the worker count.
    """
    thresholds = thresholds or RegimeThresholds.default(p.d)
    thresholds.validate(p.d)
    grid = spec.grid()
    jobs = [(p, spec.n, float(F), effective) for F in grid]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            solved = list(pool.map(_solve_point, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        solved = [_solve_point(job) for job in jobs]

    rows = []
    prev = None
    for F, pairs in zip(grid, solved):
        row = SweepRow(F=float(F), pairs=pairs)
        ordered = energy_ordered(pairs)
        if spec.labeling is not Labeling.TRACKED:
            row.energy_ordered = _records(ordered, p, thresholds, effective)
        if spec.labeling is not Labeling.ENERGY:
            current = ordered if prev is None else track_branches(prev, pairs)
            if prev is not None:
                row.total_overlap, row.min_overlap = current.total_overlap, current.min_overlap
            row.tracked = _records(current, p, thresholds, effective)
            prev = current
        rows.append(row)
    return rows


def golden_section(f, a, b, xtol=1e-12):
    """Minimise a unimodal ``f`` on [a, b]; returns (x, f(x))."""
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while abs(b - a) > xtol * max(1.0, abs(a) + abs(b)):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
        if c >= d:
            break
    return (c, fc) if fc < fd else (d, fd)


def _pair_index(pair):
    i, j = (LABELS.index(x) for x in pair)
    if i == j:
        raise InvalidParameterError(f"branch pair must name two branches, got {pair}")
    return i, j


def min_gap(p: SystemParams, n: int = 1, branch_pair=("LP", "MP"), f_window=(-1.0, 1.0),
            effective: bool = False, points: int = 41) -> GapResult:
    """Field and size of the smallest Re-energy gap between two branches.

    A coarse scan brackets the minimum, golden-section search refines it.
    If the scan minimum sits on the window edge a
    :class:`BoundaryMinimumWarning` is issued and ``boundary`` is set.
    """
    i, j = _pair_index(branch_pair)
    lo, hi = (magnitude(x, Dimension.FIELD) for x in f_window)
    if points < 3 or not hi > lo:
        raise InvalidParameterError("window needs hi > lo and at least 3 scan points")

    def gap(F):
        w = eigenvalues3(_matrix(p, n, F, effective))
        return abs(w[j].real - w[i].real)

    xs = np.linspace(lo, hi, points)
    ys = [gap(x) for x in xs]
    k = int(np.argmin(ys))
    if k == 0 or k == points - 1:
        warnings.warn(f"gap minimum on window boundary at F = {xs[k]:g} kV/cm",
                      BoundaryMinimumWarning, stacklevel=2)
        return GapResult(field(xs[k]), energy(ys[k]), boundary=True)
    x, y = golden_section(gap, xs[k - 1], xs[k + 1])
    return GapResult(field(x), energy(y))


def resonance_field(p: SystemParams) -> Quantity:
    """Field at which the IX and DX diagonal entries coincide."""
    return energy_to_bias(p.delta_ix_dx, p.d)


def find_resonance(p: SystemParams, n: int = 1) -> ResonanceResult:
    """Closed-form resonance plus a numerical check in the g = 0 limit.

    With the cavity decoupled, the exciton doublet anticrossing has its
    minimum gap (= J) exactly at the closed-form field.
    """
    f0 = resonance_field(p)
    bare = p.replace(g=0.0, kappa=0.0, gamma_dx=0.0, gamma_ix=0.0)
    # photon is an exact eigenvector at g = 0; the other two form the doublet
    w = eigenvalues3(build_hermitian(bare, n, f0))
    photon = int(np.argmin(np.abs(w.real - bare.omega_c.value * n)))
    pair = tuple(LABELS[k] for k in range(3) if k != photon)
    half = max(4.0 * energy_to_bias(p.J, p.d).value, 0.5)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BoundaryMinimumWarning)
        res = min_gap(bare, n, pair, (f0.value - half, f0.value + half))
    return ResonanceResult(f0, res.field, res.gap)
