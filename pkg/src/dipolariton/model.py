"""Device parameters and the 3x3 rung Hamiltonians.

Basis order is fixed everywhere: index 0 = |n-1, IX>, 1 = |n-1, DX>,
2 = |n, g> (cavity photon with the molecule in its ground state).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, fields

import numpy as np

from .units import (
    Dimension,
    Quantity,
    angular_ghz_to_energy,
    bias_to_energy,
    energy,
    length,
    magnitude,
)

IX, DX, PHOTON = 0, 1, 2
BASIS_LABELS = ("IX", "DX", "C")


class InvalidParameterError(ValueError):
    pass


_FIELD_DIMENSIONS = {
    "omega_c": Dimension.ENERGY,
    "delta_ix_dx": Dimension.ENERGY,
    "delta_c_dx": Dimension.ENERGY,
    "d": Dimension.LENGTH,
    "J": Dimension.ENERGY,
    "g": Dimension.ENERGY,
    "kappa": Dimension.ENERGY,
    "gamma_dx": Dimension.ENERGY,
    "gamma_ix": Dimension.ENERGY,
}
_NON_NEGATIVE = ("g", "J", "kappa", "gamma_dx", "gamma_ix")


@dataclass(frozen=True)
class SystemParams:
    """Physical constants of the dot molecule + cavity.

    Energies (including the rates g, kappa, gamma, already multiplied by
    hbar) are in meV; ``d`` is in nm.  Plain floats are accepted and
    wrapped in the canonical unit.
    """

    omega_c: Quantity
    delta_ix_dx: Quantity
    delta_c_dx: Quantity
    d: Quantity
    J: Quantity
    g: Quantity
    kappa: Quantity = energy(0.0)
    gamma_dx: Quantity = energy(0.0)
    gamma_ix: Quantity = energy(0.0)

    def __post_init__(self):
        for name, dim in _FIELD_DIMENSIONS.items():
            raw = getattr(self, name)
            q = raw if isinstance(raw, Quantity) else Quantity(float(raw), dim)
            if q.dimension is not dim:
                raise InvalidParameterError(
                    f"{name} must be {dim.value}, got {q.dimension.value}"
                )
            if not math.isfinite(q.value):
                raise InvalidParameterError(f"{name} must be finite")
            object.__setattr__(self, name, q)
        if not self.d.value > 0.0:
            raise InvalidParameterError(f"d must be positive, got {self.d.value} nm")
        for name in _NON_NEGATIVE:
            if getattr(self, name).value < 0.0:
                raise InvalidParameterError(f"{name} must be >= 0, got {getattr(self, name)}")

    def replace(self, **changes) -> "SystemParams":
        values = {f.name: getattr(self, f.name) for f in fields(self)}
        values.update(changes)
        return SystemParams(**values)

    def values(self) -> dict:
        """Canonical float value of every field."""
        return {f.name: getattr(self, f.name).value for f in fields(self)}

    @property
    def is_lossless(self) -> bool:
        return self.kappa.value == 0.0 and self.gamma_dx.value == 0.0 and self.gamma_ix.value == 0.0


def reference_params(delta_ix_dx: float = -8.625) -> SystemParams:
    """Reference parameter set used by the shipped config.

    The default detuning puts the tunneling resonance at -5.75 kV/cm for
    d = 15 nm. Passing 80 meV moves it to +53.3 kV/cm.
    """
    return SystemParams(
        omega_c=energy(1320.7),
        delta_ix_dx=energy(delta_ix_dx),
        delta_c_dx=energy(10.7),
        d=length(15.0),
        J=energy(0.828),
        g=angular_ghz_to_energy(16.0),
        kappa=angular_ghz_to_energy(16.0),
        gamma_dx=angular_ghz_to_energy(0.1),
        gamma_ix=energy(0.0),
    )


@dataclass(frozen=True)
class RungMatrix:
    n: int
    entries: np.ndarray
    hermitian: bool

    def __post_init__(self):
        if self.entries.shape != (3, 3):
            raise ValueError(f"rung matrix must be 3x3, got {self.entries.shape}")

    def __array__(self, dtype=None, copy=None):
        return self.entries if dtype is None else self.entries.astype(dtype)


def _check_rung(n):
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InvalidParameterError(f"rung index must be an integer >= 1, got {n!r}")
    return int(n)


def _real_part(p: SystemParams, n: int, F, coupling_sign: float) -> np.ndarray:
    v = p.values()
    wc = v["omega_c"] * n
    stark = bias_to_energy(F, p.d).value
    h = np.zeros((3, 3), dtype=complex)
    h[IX, IX] = wc + v["delta_ix_dx"] - v["delta_c_dx"] - stark
    h[DX, DX] = wc - v["delta_c_dx"]
    h[PHOTON, PHOTON] = wc
    h[IX, DX] = h[DX, IX] = coupling_sign * v["J"] / 2.0
    h[DX, PHOTON] = h[PHOTON, DX] = v["g"] * math.sqrt(n)
    return h


def build_hermitian(p: SystemParams, n: int = 1, F=0.0) -> RungMatrix:
    """Closed-system rung Hamiltonian, interdot coupling printed as -J/2."""
    n = _check_rung(n)
    magnitude(F, Dimension.FIELD)
    return RungMatrix(n, _real_part(p, n, F, -1.0), hermitian=True)


def build_effective(p: SystemParams, n: int = 1, F=0.0) -> RungMatrix:
    """Non-Hermitian rung Hamiltonian with cavity and exciton losses.

    The interdot coupling carries +J/2 here.  That differs from
    :func:`build_hermitian` only by the phase of the IX basis vector, so
    spectra and all |C|-based observables coincide.
    """
    n = _check_rung(n)
    magnitude(F, Dimension.FIELD)
    h = _real_part(p, n, F, +1.0)
    v = p.values()
    photon_loss = (n - 1) * v["kappa"]
    h[IX, IX] -= 0.5j * (photon_loss + v["gamma_ix"])
    h[DX, DX] -= 0.5j * (photon_loss + v["gamma_dx"])
    h[PHOTON, PHOTON] -= 0.5j * n * v["kappa"]
    return RungMatrix(n, h, hermitian=p.is_lossless)
