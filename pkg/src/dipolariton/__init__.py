"""Polariton spectra of a tunnel-coupled double quantum dot in a microcavity."""

__version__ = "0.1.0"

from .model import SystemParams, build_effective, build_hermitian, reference_params
from .spectral import eig3, track_branches
from .sweep import SweepSpec, find_resonance, min_gap, run_sweep

__all__ = [
    "SystemParams",
    "build_effective",
    "build_hermitian",
    "eig3",
    "find_resonance",
    "min_gap",
    "reference_params",
    "run_sweep",
    "SweepSpec",
    "track_branches",
]
