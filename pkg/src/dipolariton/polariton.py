"""Observables of a single polariton branch.

Amplitudes are taken from unit-norm right eigenvectors; for the lossy
Hamiltonian no biorthogonal normalisation is applied.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .model import DX, IX, PHOTON, InvalidParameterError
from .spectral import EigenPair
from .units import Dimension, Quantity, energy_to_rate, length, magnitude, rate_to_lifetime, time

DARK_RATE_GHZ = 1e-6
GAIN_TOL = 1e-12


class ModelViolationError(ArithmeticError):
    """An eigenvalue with positive imaginary part (gain) from a passive model."""


class Regime(enum.Enum):
    CONVENTIONAL_POLARITON = "ConventionalPolariton"
    DARK_DIPOLARITON = "DarkDipolariton"
    BRIGHT_DIPOLARITON = "BrightDipolariton"
    UNCLASSIFIED = "Unclassified"


@dataclass(frozen=True)
class PolaritonBranch:
    label: str
    energy: complex
    c_ix: complex
    c_dx: complex
    c_g: complex

    @property
    def fractions(self) -> tuple[float, float, float]:
        return (abs(self.c_ix) ** 2, abs(self.c_dx) ** 2, abs(self.c_g) ** 2)


@dataclass(frozen=True)
class RegimeThresholds:
    """Cut-offs for the regime classifier, EDM limits in nm."""

    bpd_high: float
    bpd_low: float
    edm_high: float
    edm_low: float

    @classmethod
    def default(cls, d) -> "RegimeThresholds":
        d_nm = magnitude(d, Dimension.LENGTH)
        return cls(bpd_high=0.3, bpd_low=0.05, edm_high=0.5 * d_nm, edm_low=0.1 * d_nm)

    def validate(self, d) -> None:
        d_nm = magnitude(d, Dimension.LENGTH)
        ok = (
            0.0 < self.bpd_low < self.bpd_high < 0.5
            and 0.0 < self.edm_low < self.edm_high < d_nm
        )
        if not ok:
            raise InvalidParameterError(f"malformed regime thresholds {self} for d = {d_nm} nm")


@dataclass(frozen=True)
class Observables:
    bpd: float
    edm: Quantity
    d: Quantity
    gamma: Quantity
    tau: Quantity
    fractions: tuple[float, float, float]


def hopfield(e: EigenPair, label: str = "") -> PolaritonBranch:
    v = e.vector
    return PolaritonBranch(label, e.value, complex(v[IX]), complex(v[DX]), complex(v[PHOTON]))


def bpd(b: PolaritonBranch) -> float:
    """Bright polariton degree |C_g * C_DX|."""
    return abs(b.c_g) * abs(b.c_dx)


def edm(b: PolaritonBranch, d) -> Quantity:
    """Exciton dipole moment d * |C_IX|, as a length."""
    d_nm = magnitude(d, Dimension.LENGTH)
    if not d_nm > 0.0:
        raise InvalidParameterError(f"d must be positive, got {d_nm} nm")
    return length(d_nm * abs(b.c_ix))


def decay_rate(e: EigenPair) -> Quantity:
    """Population decay rate -2 Im(lambda)/hbar, in 1/s."""
    im = e.value.imag
    if im > GAIN_TOL * e.matrix_norm:
        raise ModelViolationError(f"eigenvalue {e.value} has gain (Im > 0)")
    return energy_to_rate(max(-2.0 * im, 0.0))


def lifetime(gamma) -> Quantity:
    """1/gamma in ps, infinite below 1e-6 GHz."""
    g = magnitude(gamma, Dimension.RATE)
    if g < DARK_RATE_GHZ * 1e9:
        return time(math.inf)
    return rate_to_lifetime(gamma)


def observables(e: EigenPair, d) -> Observables:
    b = hopfield(e)
    gamma = decay_rate(e)
    return Observables(
        bpd=bpd(b),
        edm=edm(b, d),
        d=length(magnitude(d, Dimension.LENGTH)),
        gamma=gamma,
        tau=lifetime(gamma),
        fractions=b.fractions,
    )


def classify_regime(obs: Observables, thresholds: RegimeThresholds | None = None) -> Regime:
    """Diagnostic regime tag; the boundaries are configuration, not physics."""
    t = thresholds or RegimeThresholds.default(obs.d)
    t.validate(obs.d)
    x, e = obs.bpd, obs.edm.value
    if x >= t.bpd_high and e <= t.edm_low:
        return Regime.CONVENTIONAL_POLARITON
    if x <= t.bpd_low and e >= t.edm_high:
        return Regime.DARK_DIPOLARITON
    if x > t.bpd_low and e > t.edm_low:
        return Regime.BRIGHT_DIPOLARITON
    return Regime.UNCLASSIFIED


def column_sums(pairs) -> np.ndarray:
    """Sum over branches of |C_x|^2 for each basis state x."""
    return np.sum([np.abs(p.vector) ** 2 for p in pairs], axis=0)
