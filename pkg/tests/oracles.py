"""Reference computations that share no code path with the package."""
import itertools
import math

import numpy as np

# Planck constant h (exact, SI 2019) in meV*s; E = h*f for an ordinary frequency f.
H_PLANCK_MEV_S = 4.135667696e-12


def jacobi_eigvalsh(a, sweeps=60):
    """Eigenvalues of a complex Hermitian matrix by cyclic Jacobi.

    The n x n Hermitian A = X + iY is embedded as the real symmetric
    [[X, -Y], [Y, X]], whose spectrum is that of A with every eigenvalue
    doubled.
    """
    a = np.asarray(a, dtype=complex)
    n = a.shape[0]
    m = np.block([[a.real, -a.imag], [a.imag, a.real]]).astype(float)
    size = 2 * n
    for _ in range(sweeps):
        off = math.sqrt(sum(m[i, j] ** 2 for i in range(size) for j in range(size) if i != j))
        if off < 1e-15 * max(1.0, np.abs(m).max()):
            break
        for p in range(size - 1):
            for q in range(p + 1, size):
                if abs(m[p, q]) < 1e-300:
                    continue
                theta = (m[q, q] - m[p, p]) / (2.0 * m[p, q])
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for k in range(size):
                    mkp, mkq = m[k, p], m[k, q]
                    m[k, p] = c * mkp - s * mkq
                    m[k, q] = s * mkp + c * mkq
                for k in range(size):
                    mpk, mqk = m[p, k], m[q, k]
                    m[p, k] = c * mpk - s * mqk
                    m[q, k] = s * mpk + c * mqk
    w = np.sort(np.diag(m))
    return w[::2]


def charpoly3(a):
    """Coefficients (c2, c1, c0) of det(lambda I - A) = l^3 + c2 l^2 + c1 l + c0."""
    a = np.asarray(a, dtype=complex)
    tr = a[0, 0] + a[1, 1] + a[2, 2]
    minors = (a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
              + a[0, 0] * a[2, 2] - a[0, 2] * a[2, 0]
              + a[1, 1] * a[2, 2] - a[1, 2] * a[2, 1])
    det = (a[0, 0] * (a[1, 1] * a[2, 2] - a[1, 2] * a[2, 1])
           - a[0, 1] * (a[1, 0] * a[2, 2] - a[1, 2] * a[2, 0])
           + a[0, 2] * (a[1, 0] * a[2, 1] - a[1, 1] * a[2, 0]))
    return -tr, minors, -det


def charpoly_roots(a, iters=500):
    """Eigenvalues of a 3x3 complex matrix as roots of its characteristic cubic.

    Durand-Kerner iteration on the shifted cubic, then Newton polishing.
    """
    a = np.asarray(a, dtype=complex)
    shift = (a[0, 0] + a[1, 1] + a[2, 2]) / 3.0
    b = a - shift * np.eye(3)
    c2, c1, c0 = charpoly3(b)

    def poly(x):
        return ((x + c2) * x + c1) * x + c0

    def dpoly(x):
        return (3 * x + 2 * c2) * x + c1

    scale = max(1.0, abs(c1) ** 0.5, abs(c0) ** (1 / 3))
    z = [scale * (0.4 + 0.9j) ** k for k in range(3)]
    for _ in range(iters):
        new = []
        for i in range(3):
            denom = 1.0
            for j in range(3):
                if j != i:
                    denom *= z[i] - z[j]
            new.append(z[i] - poly(z[i]) / denom)
        done = max(abs(x - y) for x, y in zip(new, z)) < 1e-16 * scale
        z = new
        if done:
            break
    for i in range(3):
        for _ in range(3):
            d = dpoly(z[i])
            if d != 0:
                z[i] = z[i] - poly(z[i]) / d
    return np.array(z) + shift


def match_multisets(x, y):
    """Largest |x_i - y_perm(i)| under the best of the six pairings."""
    return min(max(abs(x[i] - y[p[i]]) for i in range(3)) for p in itertools.permutations(range(3)))


def two_level(e1, e2, v):
    """Eigenvalues of [[e1, v], [v, e2]] in closed form, ascending."""
    mean, half = (e1 + e2) / 2.0, (e1 - e2) / 2.0
    r = math.hypot(half, v)
    return mean - r, mean + r
