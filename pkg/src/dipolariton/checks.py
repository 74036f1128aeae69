"""Self-consistency checks run by ``dipolariton validate``."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import IX, SystemParams, build_effective, build_hermitian
from .polariton import bpd, column_sums, edm, hopfield
from .spectral import eig3, energy_ordered
from .sweep import default_spec, find_resonance, resonance_field, run_sweep


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _rel(a, b):
    return abs(a - b) / abs(b)


def jc_splitting(p: SystemParams, n: int) -> float:
    """Splitting of the DX-photon doublet at zero detuning with J = 0."""
    q = p.replace(J=0.0, delta_c_dx=0.0, kappa=0.0, gamma_dx=0.0, gamma_ix=0.0)
    pairs = [e for e in eig3(build_hermitian(q, n, 0.0)) if abs(e.vector[IX]) < 0.5]
    return abs(pairs[1].value.real - pairs[0].value.real)


def check_jc_limit(p):
    out = []
    for n in (1, 4):
        s = jc_splitting(p, n)
        want = 2 * p.g.value * math.sqrt(n)
        out.append(CheckResult(f"jc_splitting_n{n}", _rel(s, want) <= 1e-10,
                               f"{s:.12g} meV vs 2g*sqrt(n) = {want:.12g} meV"))
    return out


def check_tunneling_gap(p):
    q = p.replace(g=0.0, kappa=0.0, gamma_dx=0.0, gamma_ix=0.0)
    res = find_resonance(q)
    gap = res.numeric_gap.value
    return [CheckResult("tunneling_gap", _rel(gap, p.J.value) <= 1e-8,
                        f"gap {gap:.12g} meV at F = {res.numeric.value:.9g} kV/cm, J = {p.J.value} meV")]


def check_dark_state(p):
    """Triple resonance: middle branch has no DX weight."""
    q = p.replace(delta_c_dx=0.0, kappa=0.0, gamma_dx=0.0, gamma_ix=0.0)
    mp = energy_ordered(eig3(build_hermitian(q, 1, resonance_field(q)))).mp
    b = hopfield(mp)
    g, J = q.g.value, q.J.value
    want = q.d.value * 2 * g / math.hypot(2 * g, J)
    got = edm(b, q.d).value
    ok = abs(b.c_dx) <= 1e-12 and bpd(b) <= 1e-12 and abs(got - want) <= 1e-10 * max(want, 1.0)
    return [CheckResult("dark_dipolariton", ok, f"|c_dx| = {abs(b.c_dx):.2e}, EDM = {got:.12g} nm (expected {want:.12g})")]


def check_sum_rules(p, steps=801):
    spec = default_spec(p, steps=steps)
    worst_norm = worst_cols = worst_gamma = 0.0
    for row in run_sweep(p, spec, effective=False):
        for e in row.pairs:
            worst_norm = max(worst_norm, abs(np.sum(np.abs(e.vector) ** 2) - 1.0))
        worst_cols = max(worst_cols, float(np.max(np.abs(column_sums(row.pairs) - 1.0))))
    v = p.values()
    total = (3 * spec.n - 2) * v["kappa"] + v["gamma_dx"] + v["gamma_ix"]
    for row in run_sweep(p, spec, effective=True):
        s = sum(-2.0 * e.value.imag for e in row.pairs)
        if total > 0:
            worst_gamma = max(worst_gamma, abs(s - total) / total)
    return [
        CheckResult("normalisation", worst_norm <= 1e-12, f"max |sum f - 1| = {worst_norm:.2e}"),
        CheckResult("column_sums", worst_cols <= 1e-10, f"max |sum_branches |C_x|^2 - 1| = {worst_cols:.2e}"),
        CheckResult("gamma_trace", worst_gamma <= 1e-10, f"max relative trace-rule error = {worst_gamma:.2e}"),
    ]


def check_gauge(p, fields=(-10.0, 0.0, 10.0)):
    worst = 0.0
    lossless = p.replace(kappa=0.0, gamma_dx=0.0, gamma_ix=0.0)
    f0 = resonance_field(p).value
    for F in fields:
        a = eig3(build_hermitian(lossless, 1, f0 + F))
        b = eig3(build_effective(lossless, 1, f0 + F))
        for x, y in zip(a, b):
            worst = max(worst, abs(x.value - y.value) / max(abs(x.value), 1.0),
                        float(np.max(np.abs(np.abs(x.vector) - np.abs(y.vector)))))
    return [CheckResult("gauge_equivalence", worst <= 1e-12, f"max deviation {worst:.2e}")]


def run_all(p: SystemParams) -> list[CheckResult]:
    results = []
    for check in (check_jc_limit, check_tunneling_gap, check_dark_state, check_sum_rules, check_gauge):
        results.extend(check(p))
    return results


def resonance_report(p: SystemParams) -> str:
    res = find_resonance(p)
    return (
        f"closed-form F* = {res.closed_form.value:.9g} kV/cm\n"
        f"numeric F* (g = 0) = {res.numeric.value:.9g} kV/cm, gap = {res.numeric_gap.value:.9g} meV"
    )
