"""Invariant suites run by `opoly verify` over a small parameter lattice."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from ._parallel import grid_map
from .core import ClassicalFamily, KernelAccumulator, classical_recurrence, gauss_rule, lanczos_recurrence
from .electrostatics import (
    CASES,
    ElectroSystem,
    equilibrium_residual,
    ladder_identity_check,
    sample_points,
    structure_relation,
)
from .transforms import MeasureSpec, christoffel_step, representation_crosscheck
from .zeros import interlacing_report, mass_scan, min_mass, min_mass_by_bisection, straddle

PARAMS = (-0.5, 0.0, 0.5, 2.0)
MASSES = (0.1, 1.0, 10.0, 1e3)
SUITES = ("core", "transforms", "zeros", "electrostatics")


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    worst: float
    bound: float
    detail: str = ""

    def line(self):
        tag = "PASS" if self.passed else "FAIL"
        return f"{tag} {self.suite}/{self.name}: worst={self.worst:.3e} bound={self.bound:.1e} {self.detail}".rstrip()

    def to_dict(self):
        return {"suite": self.suite, "name": self.name, "passed": self.passed, "worst": self.worst,
                "bound": self.bound, "detail": self.detail}


def _lt(suite, name, values, bound, detail=""):
    worst = float(max(values)) if len(values) else 0.0
    return CheckResult(suite, name, worst < bound, worst, bound, detail)


def _families():
    fams = [ClassicalFamily.laguerre(a) for a in PARAMS]
    fams += [ClassicalFamily.jacobi(a, b) for a, b in itertools.product(PARAMS, PARAMS)]
    return fams


def _exterior_specs(mass=1.0):
    out = []
    for f in _families():
        pts = (0.0, -1.0) if f.kind == "laguerre" else (-1.0, 1.0, -1.5, 1.5)
        out += [MeasureSpec(f, a, mass) for a in pts]
    return out


def suite_core(**_):
    rel = []
    for f in _families():
        exact = classical_recurrence(f, 10)
        x, w = gauss_rule(f, 40)
        disc = lanczos_recurrence(x, w, 10)
        rel.append(np.max(np.abs(disc.beta - exact.beta) / (1 + np.abs(exact.beta))))
        rel.append(np.max(np.abs(disc.gamma[1:] - exact.gamma[1:]) / exact.gamma[1:]))
    kern = []
    for s in _exterior_specs():
        K = KernelAccumulator.build(s.base(14), s.a, 12)
        ks = np.array([K[j] for j in range(13)])
        kern.append(0.0 if (ks[0] > 0 and np.all(np.diff(ks) > 0)) else 1.0)
    return [
        _lt("core", "recurrence-vs-quadrature", rel, 1e-10),
        _lt("core", "kernel-positive-increasing", kern, 0.5),
    ]


def suite_transforms(**_):
    rep, chr_ = [], []
    rng = np.random.default_rng(1)
    for s in _exterior_specs():
        for N in MASSES:
            lo, hi = (-1.5, 1.5) if s.family.kind == "jacobi" else (-2.0, 30.0)
            rep.append(representation_crosscheck(s.with_mass(N), 6, rng.uniform(lo, hi, 40)))
    for f in _families():
        a = -1.5 if f.kind == "jacobi" else -1.0
        x, w = gauss_rule(f, 60)
        star = christoffel_step(classical_recurrence(f, 12), a)
        disc = lanczos_recurrence(x, w * np.abs(x - a), 8)
        chr_.append(np.max(np.abs(disc.gamma[1:9] - star.gamma[1:9]) / star.gamma[1:9]))
    return [
        _lt("transforms", "uvarov-representations", rep, 1e-9),
        _lt("transforms", "christoffel-vs-quadrature", chr_, 1e-9),
    ]


def suite_zeros(**_):
    specs = [(s.with_mass(N), n) for s in _exterior_specs() for N in (1.0, 1e3) for n in (3, 6)]
    bad = grid_map(lambda sn: 0.0 if interlacing_report(*sn).holds else 1.0, specs)
    grid = [0.0] + [10.0**k for k in range(-2, 5)]
    mono = grid_map(lambda s: 0.0 if mass_scan(s, 4, grid).monotone else 1.0,
                    [MeasureSpec(f, -1.0 if f.kind == "laguerre" else 1.0) for f in _families()])
    n0, strad = [], []
    for f, a in [(ClassicalFamily.laguerre(2.0), -1.0), (ClassicalFamily.jacobi(0.0, 0.0), -2.0),
                 (ClassicalFamily.jacobi(0.5, 2.0), 1.5)]:
        for n in (2, 5, 8):
            s = MeasureSpec(f, a)
            f0, fb = min_mass(s, n), min_mass_by_bisection(s, n)
            n0.append(abs(f0 - fb) / f0)
            strad.append(0.0 if straddle(s, n).confirmed else 1.0)
    return [
        _lt("zeros", "interlacing", bad, 0.5),
        _lt("zeros", "monotone-in-N", mono, 0.5),
        _lt("zeros", "min-mass-formula-vs-bisection", n0, 1e-8),
        _lt("zeros", "min-mass-straddle", strad, 0.5),
    ]


def _case_family_points():
    for f in _families():
        if f.kind == "laguerre":
            yield "laguerre_a0", f, 0.0
            yield "laguerre_neg", f, -1.0
        else:
            yield "jacobi_m1", f, -1.0
            yield "jacobi_neg", f, -1.5


def suite_electrostatics(perturb_b=0.0, **_):
    lem, qcf, ode, gt = [], [], [], []
    rng = np.random.default_rng(2)
    for case, f, a in _case_family_points():
        for n in (2, 5, 10):
            sr = structure_relation(case, f, n, a, b_shift=perturb_b, verify=False)
            lem.append(ladder_identity_check(sr, sr.starred, n, sample_points(f, n)))
            for N in (0.0, 1.0, 100.0):
                es = ElectroSystem(case, f, n, N, a)
                qcf.append(es.q_polynomial().consistency())
                lo = -1.0 if f.kind == "jacobi" else 0.0
                hi = 1.0 if f.kind == "jacobi" else 4.0 * n + 10
                ode.append(es.ode_residual(rng.uniform(lo, hi, 20)))
                if N > 0:
                    gt.append(equilibrium_residual(MeasureSpec(f, a, N), n, samples=0).max_residual)
    assert set(c for c, _, _ in _case_family_points()) == set(CASES)
    return [
        _lt("electrostatics", "structure-relation-identity", lem, 1e-9),
        _lt("electrostatics", "q-closed-form", qcf, 1e-10),
        _lt("electrostatics", "ode-residual", ode, 1e-7),
        _lt("electrostatics", "equilibrium-residual", gt, 1e-6),
    ]


RUNNERS = {
    "core": suite_core,
    "transforms": suite_transforms,
    "zeros": suite_zeros,
    "electrostatics": suite_electrostatics,
}


def run_suites(names=None, perturb_b=0.0):
    names = list(names or SUITES)
    out = []
    for name in names:
        out.extend(RUNNERS[name](perturb_b=perturb_b))
    return out
