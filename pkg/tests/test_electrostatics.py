import itertools
import json

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.polynomial import Polynomial as P

from opoly.core import ClassicalFamily
from opoly.electrostatics import (
    ElectroSystem,
    EquilibriumReport,
    case_of,
    classical_pearson,
    equilibrium_residual,
    external_potential,
    laguerre_coeff_trends,
    laguerre_neg_closed_forms,
    ladder_identity_check,
    ode_coefficients,
    pearson_star,
    q_polynomial,
    q_zero_trend,
    sample_points,
    structure_relation,
)
from opoly.errors import DomainError, PoleError, SingularConfigurationError
from opoly.transforms import MeasureSpec
from oracles import UvarovOracle, pderiv, peval

params = st.sampled_from([-0.5, 0.0, 0.5, 2.0])
LAG, JAC = ClassicalFamily.laguerre, ClassicalFamily.jacobi


def _settings():
    for al in (-0.5, 0.0, 0.5, 2.0):
        yield "laguerre_a0", LAG(al), None
        yield "laguerre_neg", LAG(al), -1.0
    for al, be in itertools.product((-0.5, 0.0, 0.5, 2.0), repeat=2):
        yield "jacobi_m1", JAC(al, be), None
        yield "jacobi_neg", JAC(al, be), -1.5
        yield "jacobi_neg", JAC(al, be), 2.0


SETTINGS = list(_settings())


def test_case_classification():
    assert case_of(MeasureSpec(LAG(1), 0.0)) == "laguerre_a0"
    assert case_of(MeasureSpec(LAG(1), -2.0)) == "laguerre_neg"
    assert case_of(MeasureSpec(JAC(0, 0), -1.0)) == "jacobi_m1"
    assert case_of(MeasureSpec(JAC(0, 0), 3.0)) == "jacobi_neg"
    with pytest.raises(DomainError):
        case_of(MeasureSpec(JAC(0, 0), 1.0))


@pytest.mark.parametrize("fam,a", [(LAG(2.0), 0.0), (LAG(0.5), -1.0), (JAC(0.5, 2.0), -1.0), (JAC(2.0, -0.5), -1.5), (JAC(0, 0), 2.5)])
def test_pearson_equation(fam, a):
    # d/dx [phi w*] = psi w*, with w* = |x - a| w, checked by complex step on log w*
    pp = pearson_star(fam, a)
    xs = np.linspace(0.3, 5.0, 7) if fam.kind == "laguerre" else np.linspace(-0.9, 0.9, 7)
    h = 1e-30
    for x in xs:
        logw = lambda z: np.log(np.abs(x - a) if z.imag == 0 else (z - a) * np.sign(x - a)) + (
            fam.alpha * np.log(z) - z if fam.kind == "laguerre" else fam.alpha * np.log(1 - z) + fam.beta * np.log(1 + z))
        dlogw = logw(x + 1j * h).imag / h
        lhs = pp.phi.deriv()(x) + pp.phi(x) * dlogw
        assert lhs == pytest.approx(pp.psi(x), rel=1e-12, abs=1e-12)


@pytest.mark.parametrize("case,fam,a", SETTINGS)
@pytest.mark.parametrize("n", [2, 3, 6, 10])
def test_structure_identity(case, fam, a, n):
    sr = structure_relation(case, fam, n, a, verify=False)
    assert ladder_identity_check(sr, sr.starred, n, sample_points(fam, n)) < 1e-9


@pytest.mark.parametrize("al", [-0.5, 0.0, 2.0])
@pytest.mark.parametrize("n", [2, 5, 9])
def test_mass_at_zero_B_coefficient(al, n):
    sr = structure_relation("laguerre_a0", LAG(al), n)
    assert sr.B(n).coef == pytest.approx([n * (n + al + 1)])
    # the value n + alpha + 1 breaks the identity
    bad = structure_relation("laguerre_a0", LAG(al), n, b_shift=(n + al + 1) - n * (n + al + 1), verify=False)
    assert ladder_identity_check(bad, bad.starred, n, sample_points(LAG(al), n)) > 1e-3


def test_exterior_jacobi_B_sign():
    # B without the leading minus on U gamma_n / lambda_{n-1} breaks the identity
    fam, a, n = JAC(0.5, 0.5), -2.0, 5
    sr = structure_relation("jacobi_neg", fam, n, a)
    U, W = sr._exterior(n - 1)
    l1, bs, g = sr.lam[n - 2], sr.starred.beta[n - 2], sr.base.gamma[n - 1]
    unsigned = U * g / l1 - W + W * P([-bs, 1.0]) / l1
    assert unsigned != sr.B(n - 1)
    xs = sample_points(fam, n)
    gs, bsn = sr.starred.gamma[n - 1], sr.starred.beta[n - 1]
    rhs = sr.phi.deriv()(xs) - sr.psi(xs)
    lhs = sr.A(n)(xs) + sr.A(n - 1)(xs) + (xs - bsn) * unsigned(xs) / gs
    assert np.max(np.abs(lhs - rhs) / (np.abs(lhs) + np.abs(rhs))) > 1e-2
    assert ladder_identity_check(sr, sr.starred, n, xs) < 1e-9


def test_perturbed_b_fails_identity():
    with pytest.raises(Exception):
        structure_relation("jacobi_m1", JAC(0, 0), 4, b_shift=1e-3)


@pytest.mark.parametrize("al,a,n", [(0.0, -1.0, 3), (2.0, -0.5, 6), (0.5, -2.0, 9)])
def test_laguerre_neg_simplified_forms(al, a, n):
    sr = structure_relation("laguerre_neg", LAG(al), n, a)
    A, B = laguerre_neg_closed_forms(LAG(al), a, n)
    for got, want in ((A, sr.A(n)), (B, sr.B(n))):
        w = np.pad(want.coef, (0, 3))[:3]
        g = np.pad(got.coef, (0, 3))[:3]
        assert g == pytest.approx(w, rel=1e-11, abs=1e-11 * np.max(np.abs(w)))


@pytest.mark.parametrize("case,fam,a", SETTINGS[::3])
@pytest.mark.parametrize("N", [0.0, 1.0, 100.0])
def test_q_closed_form(case, fam, a, N):
    for n in (2, 5, 10):
        q = q_polynomial(case, fam, n, N, a)
        assert q.consistency() < 1e-10


@pytest.mark.parametrize("al,a", [(0.0, -1.0), (2.0, -0.5), (-0.5, -2.0)])
def test_laguerre_neg_linear_coefficient_forms(al, a):
    for n, N in itertools.product((2, 5, 8), (0.0, 1.0, 50.0)):
        es = ElectroSystem("laguerre_neg", LAG(al), n, N, a)
        r1 = es.q_closed_form().coef[1]
        assert es.laguerre_neg_r_alt() == pytest.approx(r1, rel=1e-10, abs=1e-10 * abs(es.Q.coef).max())


@pytest.mark.parametrize("case,fam,a", SETTINGS[::4])
def test_third_relation(case, fam, a):
    for n, N in itertools.product((2, 4, 9), (0.0, 1.0, 100.0)):
        es = ElectroSystem(case, fam, n, N, a)
        lo, hi = (-1.0, 1.0) if fam.kind == "jacobi" else (0.0, 30.0)
        assert es.third_relation_residual(np.linspace(lo, hi, 23)[1:-1] + 1e-3) < 1e-8


def _ode_oracle_residual(es, kind, al, be, a, N, n, xs):
    o = UvarovOracle(kind, al, be, a, N, n)
    d1 = pderiv(o.pN)
    d2 = pderiv(d1)
    calA, calB, calC = es.ode().evaluate(xs)
    with mp.workdps(40):
        p = np.array([float(peval(o.pN, mp.mpf(x))) for x in xs])
        dp = np.array([float(peval(d1, mp.mpf(x))) for x in xs])
        ddp = np.array([float(peval(d2, mp.mpf(x))) for x in xs])
    terms = np.abs(np.stack([calA * ddp, calB * dp, calC * p]))
    return float(np.max(np.abs(calA * ddp + calB * dp + calC * p) / terms.max(axis=0)))


@pytest.mark.parametrize("kind,case,al,be,a,N,n,lo,hi", [
    ("laguerre", "laguerre_a0", 2.0, 0.0, 0.0, 1.0, 4, 0.0, 12.0),
    ("laguerre", "laguerre_a0", 2.0, 0.0, 0.0, 0.0, 4, 0.0, 12.0),
    ("jacobi", "jacobi_m1", 0.0, 0.0, -1.0, 10.0, 3, -1.0, 1.0),
    ("laguerre", "laguerre_neg", 0.5, 0.0, -1.0, 100.0, 7, 0.0, 20.0),
    ("jacobi", "jacobi_neg", 0.5, 2.0, -1.5, 1.0, 10, -1.0, 1.0),
    ("jacobi", "jacobi_neg", 2.0, -0.5, 2.0, 100.0, 6, -1.0, 1.0),
])
def test_ode_against_high_precision_polynomial(kind, case, al, be, a, N, n, lo, hi):
    fam = LAG(al) if kind == "laguerre" else JAC(al, be)
    es = ElectroSystem(case, fam, n, N, None if case in ("laguerre_a0", "jacobi_m1") else a)
    xs = np.random.default_rng(n).uniform(lo, hi, 20)
    assert _ode_oracle_residual(es, kind, al, be, a, N, n, xs) < 1e-7
    assert es.ode_residual(xs) < 1e-7


def test_ode_pole_error():
    es = ElectroSystem("laguerre_a0", LAG(2.0), 4, 1.0)
    u = es.q_polynomial().roots[0]
    with pytest.raises(PoleError):
        es.ode().evaluate(np.array([u]))


def test_ode_coefficients_wrapper():
    oc = ode_coefficients("jacobi_m1", JAC(0, 0), 3, 10.0)
    assert oc.c == pytest.approx(ElectroSystem("jacobi_m1", JAC(0, 0), 3, 10.0).c)


@pytest.mark.parametrize("kind,al,be,a,N,n", [
    ("laguerre", 2.0, 0.0, 0.0, 1.0, 5),
    ("jacobi", 0.5, 0.5, -1.0, 3.0, 4),
    ("jacobi", 0.5, 2.0, -2.0, 100.0, 6),
    ("laguerre", 0.0, 0.0, -1.0, 1e3, 10),
    ("jacobi", 2.0, 2.0, 1.25, 1e3, 10),
])
def test_equilibrium_against_oracle(kind, al, be, a, N, n):
    fam = LAG(al) if kind == "laguerre" else JAC(al, be)
    spec = MeasureSpec(fam, a, N)
    rep = equilibrium_residual(spec, n)
    assert rep.max_residual < 1e-6
    o = UvarovOracle(kind, al, be, a, N, n)
    z = o.zeros()
    q = o.q_from_zeros(z)
    assert max(o.equilibrium(z, q)) < 1e-30
    # local-frame Q against the oracle Q re-expanded at a
    _, _, Qt = ElectroSystem.from_spec(spec, n).local_frame()
    with mp.workdps(40):
        A = o.a
        ref = [q[0] + q[1] * A + q[2] * A * A, q[1] + 2 * q[2] * A, q[2]]
        scale = Qt.coef[-1] / float(ref[len(Qt.coef) - 1])
        for k, c in enumerate(Qt.coef):
            assert c / scale == pytest.approx(float(ref[k]), rel=1e-10)


@pytest.mark.parametrize("case,fam,a", SETTINGS[::2])
def test_equilibrium_lattice(case, fam, a):
    a = {"laguerre_a0": 0.0, "jacobi_m1": -1.0}.get(case, a)
    for n, N in itertools.product((2, 5, 10), (0.1, 10.0, 1e3)):
        assert equilibrium_residual(MeasureSpec(fam, a, N), n, samples=0).max_residual < 1e-6


def test_equilibrium_negative_control():
    es = ElectroSystem("jacobi_m1", JAC(0.5, 0.5), 4, 3.0)
    z = np.array([-0.8, -0.3, 0.2, 0.7])
    assert np.max(es.equilibrium(z)) > 1e-2


def test_singular_configuration():
    es = ElectroSystem("laguerre_a0", LAG(2.0), 3, 1.0)
    with pytest.raises(SingularConfigurationError):
        es.equilibrium(np.array([0.0, 1.0, 2.0]))


def test_potential_derivative_is_the_field():
    # V' = -psi/phi + Q'/Q
    es = ElectroSystem("jacobi_neg", JAC(0.5, 2.0), 5, 10.0, -1.5)
    xs = np.linspace(-0.9, 0.9, 9)
    h = 1e-6
    dV = (es.potential(xs + h) - es.potential(xs - h)) / (2 * h)
    field = -es.sr.psi(xs) / es.sr.phi(xs) + es.Q.deriv()(xs) / es.Q(xs)
    assert dV == pytest.approx(field, rel=1e-7)


def test_equilibrium_report_roundtrip():
    rep = equilibrium_residual(MeasureSpec(LAG(2.0), 0.0, 1.0), 5)
    assert EquilibriumReport.from_dict(json.loads(json.dumps(rep.to_dict()))) == rep
    assert len(rep.neighbour_energies) == 10


@given(params, st.sampled_from([0.1, 1.0, 10.0, 1e3]), st.integers(2, 10))
def test_mass_at_zero_q_location(al, N, n):
    es = ElectroSystem("laguerre_a0", LAG(al), n, N)
    assert 0 < es.c < n + al + 1
    assert es.q_polynomial().roots[0] > 0


@given(params, params, st.sampled_from([0.1, 1.0, 10.0, 1e3]), st.integers(2, 10))
def test_mass_at_minus_one_q_location(al, be, N, n):
    q = q_polynomial("jacobi_m1", JAC(al, be), n, N)
    assert q.poly(1.0) > 0 > q.poly(-1.0)
    assert -1 < q.roots[0] < 1


def test_q_zero_trends():
    ns = [8, 16, 32, 64]
    assert q_zero_trend("laguerre_a0", LAG(0.5), ns, 1.0).approaching
    assert q_zero_trend("jacobi_m1", JAC(0.5, 0.5), ns, 1.0).approaching


def test_laguerre_coefficient_trends():
    b, g = laguerre_coeff_trends(0.0, -1.0, [50, 100, 200])
    assert all(0.4 <= v <= 0.6 for v in b.values) and b.approaching
    assert g.approaching


def test_external_potential_peels_root_at_zero():
    pp = pearson_star(LAG(1.0), 0.0)
    v = external_potential(pp, P([1.0]), np.array([1.0, 2.0]))
    # -integral (alpha + 2 - x)/x dx = -(alpha+2) ln x + x
    assert v == pytest.approx([1.0, -3 * np.log(2.0) + 2.0])


def test_classical_pearson_laguerre():
    s, t = classical_pearson(LAG(1.5))
    assert s.coef == pytest.approx([0, 1]) and t.coef == pytest.approx([2.5, -1])


@pytest.mark.parametrize("case,fam,a", SETTINGS[::3])
def test_massless_q_is_a_pure_power(case, fam, a):
    # checked on the coefficients summed from the assembly, before any snapping
    es = ElectroSystem(case, fam, 5, 0.0, a)
    q = es.Q(P([es.spec.a, 1.0])).coef
    assert np.max(np.abs(q[:-1])) < 1e-12 * abs(q[-1])


@pytest.mark.parametrize("al,be,a", [(0.0, -0.5, 3.0), (0.5, 2.0, -1.5), (2.0, 0.0, -2.0)])
def test_massless_ode_near_the_mass_point(al, be, a):
    es = ElectroSystem("jacobi_neg", JAC(al, be), 2, 0.0, a)
    xs = a - np.sign(a) * np.logspace(-6, -2, 9)
    assert es.ode_residual(xs) < 1e-8
