import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from opoly.core import (
    ClassicalFamily,
    KernelAccumulator,
    PolyEvaluator,
    RecurrenceCoeffs,
    classical_recurrence,
    eval_with_derivative,
    gamma_ratio,
    gauss_rule,
    jacobi_at_minus_one,
    jacobi_kernel_at_minus_one,
    jacobi_kernel_at_one,
    kernel_confluent,
    kernel_direct,
    kernel_value,
    laguerre_at_zero,
    laguerre_kernel_at_zero,
    lanczos_recurrence,
    orthonormal_values,
    ratios,
    squared_norm,
)
from opoly.errors import InvalidMeasureError, LengthError, NumericalBreakdownError
from oracles import coeff_polys, peval, recurrence

params = st.sampled_from([-0.5, 0.0, 0.5, 2.0])
free_param = st.floats(min_value=-0.9, max_value=5.0)


def test_laguerre_beta_first_terms():
    # beta_n = 2n + alpha + 1
    b = classical_recurrence(ClassicalFamily.laguerre(2), 3).beta
    assert (b[0], b[1]) == (3, 5)


def test_legendre_beta_vanishes():
    assert np.all(classical_recurrence(ClassicalFamily.jacobi(0, 0), 12).beta == 0)


def test_legendre_gamma1_by_quadrature():
    # <x,x>/<1,1> on [-1,1] with uniform weight
    from scipy.integrate import quad

    g1 = quad(lambda x: x * x, -1, 1)[0] / quad(lambda x: 1.0, -1, 1)[0]
    assert classical_recurrence(ClassicalFamily.jacobi(0, 0), 2).gamma[1] == pytest.approx(g1, rel=1e-14)


def test_hermite_recurrence():
    c = classical_recurrence(ClassicalFamily.hermite(), 5)
    assert np.all(c.beta == 0)
    assert c.gamma[1:] == pytest.approx([0.5, 1.0, 1.5, 2.0, 2.5])
    assert c.total_mass == pytest.approx(math.sqrt(math.pi))


@pytest.mark.parametrize("bad", [(-1.0, 0.0), (0.0, -1.5), (float("nan"), 0.0)])
def test_invalid_jacobi(bad):
    with pytest.raises(InvalidMeasureError):
        ClassicalFamily.jacobi(*bad)


def test_invalid_laguerre():
    with pytest.raises(InvalidMeasureError):
        ClassicalFamily.laguerre(-1.0)


@pytest.mark.parametrize("fam", [ClassicalFamily.jacobi(0.5, 2.0), ClassicalFamily.laguerre(-0.5), ClassicalFamily.hermite()])
def test_recurrence_matches_discretized_measure(fam):
    exact = classical_recurrence(fam, 12)
    x, w = gauss_rule(fam, 50)
    disc = lanczos_recurrence(x, w, 12)
    assert disc.beta == pytest.approx(exact.beta, abs=1e-11)
    assert disc.gamma[1:] == pytest.approx(exact.gamma[1:], rel=1e-11)
    assert disc.total_mass == pytest.approx(exact.total_mass, rel=1e-13)


def test_p0_value_and_derivative():
    ev = PolyEvaluator(classical_recurrence(ClassicalFamily.jacobi(0, 0), 4))
    assert eval_with_derivative(ev, 0, 0.3) == (1.0, 0.0)


def test_legendre_zero_from_table():
    ev = PolyEvaluator(classical_recurrence(ClassicalFamily.jacobi(0, 0), 4))
    assert abs(eval_with_derivative(ev, 3, 0.774597)[0]) < 1e-5


def test_length_error():
    ev = PolyEvaluator(classical_recurrence(ClassicalFamily.laguerre(0), 3))
    with pytest.raises(LengthError):
        ev(5, 1.0)


@given(params, params, st.integers(1, 14), st.floats(-3, 3))
def test_evaluator_matches_high_precision(al, be, n, x):
    fam = ClassicalFamily.jacobi(al, be)
    ev = PolyEvaluator(classical_recurrence(fam, n + 1))
    v, d = ev(n, x)
    with mp.workdps(40):
        b, g, _ = recurrence("jacobi", al, be, n + 1)
        c = coeff_polys(b, g, n)[n]
        ref = peval(c, mp.mpf(x))
        dref = peval([i * c[i] for i in range(1, len(c))], mp.mpf(x))
    scale = float(sum(abs(ci) * abs(x) ** i for i, ci in enumerate(c)))
    assert abs(v - float(ref)) <= 1e-13 * scale
    assert abs(d - float(dref)) <= 1e-12 * n * scale / max(abs(x), 1e-3) + 1e-13


def test_evaluator_no_overflow_at_high_degree():
    ev = PolyEvaluator(classical_recurrence(ClassicalFamily.laguerre(0), 400))
    v, d = ev(400, -50.0)
    assert math.isinf(v) or v > 0
    vs = ev.scaled(400, -50.0, 1)
    assert np.all(np.isfinite(np.asarray(vs[0], dtype=float)))


def test_complex_argument_gives_complex_step_derivative():
    ev = PolyEvaluator(classical_recurrence(ClassicalFamily.laguerre(1.5), 8))
    h = 1e-30
    v = ev(6, 2.3 + 1j * h, 0)[0]
    assert v.imag / h == pytest.approx(ev(6, 2.3)[1], rel=1e-13)


@given(free_param, st.integers(1, 30))
def test_laguerre_value_at_zero(al, n):
    ev = PolyEvaluator(classical_recurrence(ClassicalFamily.laguerre(al), n))
    assert ev(n, 0.0)[0] == pytest.approx(laguerre_at_zero(al, n), rel=1e-12)


@given(free_param, free_param, st.integers(1, 30))
def test_jacobi_value_at_minus_one(al, be, n):
    ev = PolyEvaluator(classical_recurrence(ClassicalFamily.jacobi(al, be), n))
    assert ev(n, -1.0)[0] == pytest.approx(jacobi_at_minus_one(al, be, n), rel=1e-11)


@given(free_param, st.integers(0, 25))
def test_laguerre_kernel_closed_form(al, n):
    c = classical_recurrence(ClassicalFamily.laguerre(al), n + 2)
    assert KernelAccumulator.build(c, 0.0, n)[n] == pytest.approx(laguerre_kernel_at_zero(al, n), rel=1e-11)


@given(free_param, free_param, st.integers(0, 25))
def test_jacobi_kernel_closed_forms(al, be, n):
    c = classical_recurrence(ClassicalFamily.jacobi(al, be), n + 2)
    assert KernelAccumulator.build(c, -1.0, n)[n] == pytest.approx(jacobi_kernel_at_minus_one(al, be, n), rel=1e-10)
    assert KernelAccumulator.build(c, 1.0, n)[n] == pytest.approx(jacobi_kernel_at_one(al, be, n), rel=1e-10)


@given(params, st.floats(-5, -0.01), st.integers(0, 15))
def test_kernel_positive_increasing(al, a, n):
    c = classical_recurrence(ClassicalFamily.laguerre(al), n + 3)
    K = KernelAccumulator.build(c, a, n + 1)
    ks = [K[j] for j in range(n + 2)]
    assert ks[0] > 0 and all(u < v for u, v in zip(ks, ks[1:]))
    assert K[-1] == 0


@pytest.mark.parametrize("x", [-2.0, -1.3, -1.0000001, 0.5, 3.0])
def test_kernel_forms_agree(x):
    c = classical_recurrence(ClassicalFamily.jacobi(0.5, -0.5), 12)
    a = -1.2
    ref = kernel_direct(c, a, x, 9)
    assert kernel_value(c, a, x, 9) == pytest.approx(ref, rel=1e-11)


def test_confluent_equals_diagonal():
    c = classical_recurrence(ClassicalFamily.laguerre(2), 12)
    assert kernel_confluent(c, -0.7, 8) == pytest.approx(kernel_direct(c, -0.7, -0.7, 8), rel=1e-12)


def test_squared_norm_and_orthonormal_values():
    fam = ClassicalFamily.jacobi(2, 0.5)
    c = classical_recurrence(fam, 8)
    x, w = gauss_rule(fam, 30)
    P = orthonormal_values(c, x, 6)
    G = (P * w) @ P.T
    assert G == pytest.approx(np.eye(7), abs=1e-12)
    ev = PolyEvaluator(c)
    assert squared_norm(c, 5) == pytest.approx(float(np.sum(w * ev(5, x, 0)[0] ** 2)), rel=1e-12)


@given(params, st.floats(-6, -0.05))
def test_ratios_are_value_quotients(al, a):
    c = classical_recurrence(ClassicalFamily.laguerre(al), 12)
    ev = PolyEvaluator(c)
    r = ratios(c, a, 10)
    vals = np.array([ev(k, a, 0)[0] for k in range(12)])
    assert r == pytest.approx(vals[1:12] / vals[:11], rel=1e-12)


def test_gamma_ratio_large_arguments():
    v = gamma_ratio([200.5], [199.5])
    assert v == pytest.approx(199.5, rel=1e-13)


def test_recurrence_coeffs_reject_nonpositive_gamma():
    with pytest.raises(NumericalBreakdownError):
        RecurrenceCoeffs(np.zeros(3), np.array([0.0, 1.0, -1.0]), 1.0)
