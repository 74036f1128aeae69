"""Eigenpairs of 3x3 rung matrices and branch labelling along a sweep."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .model import RungMatrix

RESIDUAL_TOL = 1e-10
HERMITIAN_TOL = 1e-14
EXCEPTIONAL_OVERLAP = 0.999
LABELS = ("LP", "MP", "UP")


class NumericalError(ArithmeticError):
    def __init__(self, message, residual=float("nan")):
        super().__init__(message)
        self.residual = residual


@dataclass(frozen=True, eq=False)
class EigenPair:
    value: complex
    vector: np.ndarray
    residual: float
    matrix_norm: float
    near_exceptional: bool = False


@dataclass(frozen=True, eq=False)
class BranchSet:
    lp: EigenPair
    mp: EigenPair
    up: EigenPair
    total_overlap: float = float("nan")
    min_overlap: float = float("nan")

    def __iter__(self):
        return iter((self.lp, self.mp, self.up))

    def as_dict(self):
        return dict(zip(LABELS, self))


def _as_array(H):
    a = np.asarray(H.entries if isinstance(H, RungMatrix) else H, dtype=complex)
    if a.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def is_hermitian(a: np.ndarray) -> bool:
    scale = np.max(np.abs(a))
    return bool(np.all(np.abs(a - a.conj().T) <= HERMITIAN_TOL * scale))


def _fix_phases(v):
    """Unit-normalise columns; largest component of each made real >= 0."""
    mag = np.abs(v)
    v = v / np.sqrt(np.sum(mag**2, axis=0))
    k = np.argmax(mag, axis=0)
    cols = np.arange(v.shape[1])
    top = v[k, cols]
    v = v * (np.abs(top) / top)
    v[k, cols] = np.abs(v[k, cols])
    return v


def _order(values):
    # lexicographic (Re, Im); ties inside 1e-12*||H|| are exact ties already
    return sorted(range(3), key=lambda i: (values[i].real, values[i].imag))


def eigenvalues3(H) -> np.ndarray:
    """Eigenvalues only, sorted by (Re, Im).  Cheap path for gap searches."""
    a = _as_array(H)
    if not np.any(a - np.diag(np.diag(a))):
        d = np.diag(a).copy()
        return d[_order(d)]
    shift = np.trace(a).real / 3.0
    b = a - shift * np.eye(3)
    if (isinstance(H, RungMatrix) and H.hermitian) or is_hermitian(a):
        w = np.linalg.eigvalsh(b).astype(complex)
    else:
        w = np.linalg.eigvals(b)
    w = w + shift
    return w[_order(w)]


def eig3(H) -> list[EigenPair]:
    """All three eigenpairs of a 3x3 (possibly non-Hermitian) matrix.

    Vectors are unit-norm right eigenvectors with the largest component
    made real and positive.  Each pair carries its residual
    ||H v - lambda v||; a residual above 1e-10 ||H||_F raises
    :class:`NumericalError`.  Pairs whose vectors overlap above 0.999
    (close to an exceptional point) are flagged, not rejected.
    """
    a = _as_array(H)
    norm = float(np.linalg.norm(a))
    if not np.any(a - np.diag(np.diag(a))):
        return _diagonal_pairs(a, norm)
    # shifting by the mean diagonal keeps vector accuracy relative to the
    # couplings instead of the ~1 eV cavity energy
    shift = np.trace(a).real / 3.0
    b = a - shift * np.eye(3)
    hermitian = (isinstance(H, RungMatrix) and H.hermitian) or is_hermitian(a)
    if hermitian:
        b = 0.5 * (b + b.conj().T)
        w, v = np.linalg.eigh(b)
        w = w.astype(complex)
    else:
        w, v = np.linalg.eig(b)
    values = w + shift
    if hermitian:
        values = values.real.astype(complex)
    v = _fix_phases(v)

    flagged = [False] * 3
    if not hermitian:
        gram = np.abs(v.conj().T @ v)
        for i, j in itertools.combinations(range(3), 2):
            if gram[i, j] > EXCEPTIONAL_OVERLAP:
                flagged[i] = flagged[j] = True

    residuals = np.sqrt(np.sum(np.abs(a @ v - v * values) ** 2, axis=0))
    bound = RESIDUAL_TOL * max(norm, np.finfo(float).tiny)
    pairs = []
    for i in _order(values):
        r = float(residuals[i])
        if r > bound:
            raise NumericalError(f"eigenpair residual {r:.3e} exceeds {bound:.3e}", residual=r)
        pairs.append(EigenPair(complex(values[i]), v[:, i].copy(), r, norm, flagged[i]))
    return pairs


def _diagonal_pairs(a, norm):
    d = np.diag(a)
    return [EigenPair(complex(d[i]), np.eye(3, dtype=complex)[i], 0.0, norm) for i in _order(d)]


def energy_ordered(pairs) -> BranchSet:
    lp, mp, up = sorted(pairs, key=lambda e: (e.value.real, e.value.imag))
    return BranchSet(lp, mp, up)


def track_branches(prev: BranchSet, current) -> BranchSet:
    """Relabel ``current`` to continue the branches of ``prev``.

    Picks the permutation maximising the summed |<prev_i|cur_j>| over all
    six assignments.
    """
    current = list(current)
    old = list(prev)
    overlap = np.abs(np.array([p.vector for p in old]).conj() @ np.array([c.vector for c in current]).T)
    best, best_total = None, -1.0
    for perm in itertools.permutations(range(3)):
        total = sum(overlap[i, perm[i]] for i in range(3))
        if total > best_total + 1e-15:
            best, best_total = perm, total
    chosen = [current[best[i]] for i in range(3)]
    return BranchSet(
        *chosen,
        total_overlap=float(best_total),
        min_overlap=float(min(overlap[i, best[i]] for i in range(3))),
    )
