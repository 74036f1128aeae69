"""Dimension-tagged scalars and the unit conversions used by the model.

Every energy inside the package is expressed in meV (hbar = 1, so rates
enter the Hamiltonian as hbar * rate).  Rates are stored in 1/s, times in ps,
fields in kV/cm and lengths in nm.  Conversion to any other supported unit
goes through the scale table below.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

# CODATA 2018 (exact since the 2019 SI redefinition for e; hbar = h / 2pi with h exact).
HBAR_MEV_S = 6.582119569e-13  # reduced Planck constant, meV * s
ELEMENTARY_CHARGE_C = 1.602176634e-19  # e, C; cancels when e*d*F is taken in eV

# e * (1 nm) * (1 kV/cm) = 1e-9 m * 1e5 V/m = 1e-4 eV = 0.1 meV
MEV_PER_NM_KVCM = 0.1


class DimensionError(ValueError):
    """Raised on arithmetic between incompatible dimensions or bad unit names."""


class Dimension(enum.Enum):
    ENERGY = "energy"
    FIELD = "field"
    LENGTH = "length"
    RATE = "rate"
    TIME = "time"
    DIMENSIONLESS = "dimensionless"


CANONICAL_UNIT = {
    Dimension.ENERGY: "meV",
    Dimension.FIELD: "kV/cm",
    Dimension.LENGTH: "nm",
    Dimension.RATE: "1/s",
    Dimension.TIME: "ps",
    Dimension.DIMENSIONLESS: "1",
}

# unit -> (dimension, size of one unit in canonical units)
_UNITS = {
    "meV": (Dimension.ENERGY, 1.0),
    "ueV": (Dimension.ENERGY, 1e-3),
    "eV": (Dimension.ENERGY, 1e3),
    "kV/cm": (Dimension.FIELD, 1.0),
    "V/m": (Dimension.FIELD, 1e-5),
    "nm": (Dimension.LENGTH, 1.0),
    "m": (Dimension.LENGTH, 1e9),
    "1/s": (Dimension.RATE, 1.0),
    "GHz": (Dimension.RATE, 1e9),
    "1/ps": (Dimension.RATE, 1e12),
    "ps": (Dimension.TIME, 1.0),
    "ns": (Dimension.TIME, 1e3),
    "s": (Dimension.TIME, 1e12),
    "1": (Dimension.DIMENSIONLESS, 1.0),
}


@dataclass(frozen=True)
class Quantity:
    """A real number in the canonical unit of ``dimension``."""

    value: float
    dimension: Dimension

    @classmethod
    def of(cls, value: float, unit: str) -> "Quantity":
        dim, scale = _lookup(unit)
        return cls(float(value) * scale, dim)

    def to(self, unit: str) -> float:
        dim, scale = _lookup(unit)
        if dim is not self.dimension:
            raise DimensionError(f"cannot express {self.dimension.value} in {unit!r}")
        return self.value / scale

    def _check(self, other) -> "Quantity":
        if not isinstance(other, Quantity):
            raise DimensionError(f"cannot combine Quantity with {type(other).__name__}")
        if other.dimension is not self.dimension:
            raise DimensionError(
                f"dimension mismatch: {self.dimension.value} vs {other.dimension.value}"
            )
        return other

    def __add__(self, other):
        return Quantity(self.value + self._check(other).value, self.dimension)

    def __sub__(self, other):
        return Quantity(self.value - self._check(other).value, self.dimension)

    def __neg__(self):
        return Quantity(-self.value, self.dimension)

    def __mul__(self, k):
        if isinstance(k, Quantity):
            raise DimensionError("products of quantities are not supported")
        return Quantity(self.value * k, self.dimension)

    __rmul__ = __mul__

    def __truediv__(self, k):
        if isinstance(k, Quantity):
            # same-dimension ratio is the only quotient we need
            return self.value / self._check(k).value
        return Quantity(self.value / k, self.dimension)

    def __lt__(self, other):
        return self.value < self._check(other).value

    def __le__(self, other):
        return self.value <= self._check(other).value

    def __gt__(self, other):
        return self.value > self._check(other).value

    def __ge__(self, other):
        return self.value >= self._check(other).value

    def __str__(self):
        return f"{self.value:g} {CANONICAL_UNIT[self.dimension]}"


def _lookup(unit):
    try:
        return _UNITS[unit]
    except KeyError:
        raise DimensionError(f"unknown unit {unit!r}") from None


def energy(value: float) -> Quantity:
    return Quantity(float(value), Dimension.ENERGY)


def field(value: float) -> Quantity:
    return Quantity(float(value), Dimension.FIELD)


def length(value: float) -> Quantity:
    return Quantity(float(value), Dimension.LENGTH)


def rate(value: float) -> Quantity:
    return Quantity(float(value), Dimension.RATE)


def time(value: float) -> Quantity:
    return Quantity(float(value), Dimension.TIME)


def magnitude(x, dimension: Dimension) -> float:
    """Canonical float value of ``x``; plain numbers are taken as canonical already."""
    if isinstance(x, Quantity):
        if x.dimension is not dimension:
            raise DimensionError(f"expected {dimension.value}, got {x.dimension.value}")
        return x.value
    return float(x)


def angular_ghz_to_energy(f_ghz: float) -> Quantity:
    """Energy hbar * (2 pi f) for a rate quoted as ``2pi x f_ghz GHz``."""
    f_ghz = float(f_ghz)
    if not f_ghz >= 0.0:
        raise DimensionError(f"angular rate must be non-negative, got {f_ghz}")
    return energy(HBAR_MEV_S * (2.0 * math.pi * f_ghz * 1e9))


def energy_to_angular_ghz(e) -> float:
    """Inverse of :func:`angular_ghz_to_energy`."""
    return magnitude(e, Dimension.ENERGY) / HBAR_MEV_S / (2.0 * math.pi * 1e9)


def energy_to_rate(e) -> Quantity:
    """Rate (1/s) whose hbar-equivalent energy is ``e``."""
    return rate(magnitude(e, Dimension.ENERGY) / HBAR_MEV_S)


def rate_to_energy(r) -> Quantity:
    return energy(magnitude(r, Dimension.RATE) * HBAR_MEV_S)


def bias_to_energy(F, d) -> Quantity:
    """Stark shift e*d*F in meV, F in kV/cm and d in nm."""
    d_nm = magnitude(d, Dimension.LENGTH)
    if not d_nm > 0.0:
        raise ValueError(f"interdot distance must be positive, got {d_nm} nm")
    return energy(MEV_PER_NM_KVCM * d_nm * magnitude(F, Dimension.FIELD))


def energy_to_bias(e, d) -> Quantity:
    """Field F such that e*d*F equals ``e``."""
    d_nm = magnitude(d, Dimension.LENGTH)
    if not d_nm > 0.0:
        raise ValueError(f"interdot distance must be positive, got {d_nm} nm")
    return field(magnitude(e, Dimension.ENERGY) / (MEV_PER_NM_KVCM * d_nm))


def rate_to_lifetime(gamma) -> Quantity:
    """Lifetime 1/gamma in ps; infinite for gamma <= 0 (lossless state)."""
    g = magnitude(gamma, Dimension.RATE)
    if g <= 0.0:
        return time(math.inf)
    return time(1e12 / g)
