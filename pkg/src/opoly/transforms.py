"""Christoffel, iterated Christoffel and Uvarov transformations.

Given a measure mu with monic orthogonal polynomials p_n, we build

    p*_n   orthogonal for (x - a) dmu        (kernel polynomials)
    p**_n  orthogonal for (x - a)^2 dmu
    p^N_n  orthogonal for dmu + N delta_a    (Uvarov, monic)

with a on the boundary of, or outside, the convex hull of the support.
The Uvarov polynomial is evaluated as p^N_n = p*_n + c_n p*_{n-1}.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    ClassicalFamily,
    KernelAccumulator,
    PolyEvaluator,
    RecurrenceCoeffs,
    classical_recurrence,
    kernel_value,
    ratios,
)
from .errors import DomainError, InvalidMeasureError, NumericalBreakdownError

# tolerance for recognising a as a support endpoint
BOUNDARY_TOL = 1e-14


@dataclass(frozen=True)
class MeasureSpec:
    """A classical family with an optional Christoffel factor and point mass at a."""

    family: ClassicalFamily
    a: float = 0.0
    mass: float = 0.0
    christoffel_level: int = 0

    def __post_init__(self):
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "mass", float(self.mass))
        if self.christoffel_level not in (0, 1, 2):
            raise InvalidMeasureError("christoffel_level must be 0, 1 or 2")
        if not (self.mass >= 0 and math.isfinite(self.mass)):
            raise InvalidMeasureError(f"mass must be finite and >= 0, got {self.mass!r}")
        if not math.isfinite(self.a):
            raise InvalidMeasureError("a must be finite")
        if self.family.kind == "hermite":
            if self.christoffel_level or self.mass:
                raise InvalidMeasureError(
                    "Hermite perturbations are handled through the symmetrized Laguerre families"
                )
            return
        xi, eta = self.family.support
        if xi < self.a < eta and not self.is_boundary:
            raise InvalidMeasureError(f"a={self.a} lies inside the support ({xi}, {eta})")

    @property
    def side(self):
        """'left' when a <= xi, 'right' when a >= eta."""
        xi, eta = self.family.support
        if self.a <= xi + BOUNDARY_TOL * (1 + abs(xi)):
            return "left"
        if self.a >= eta - BOUNDARY_TOL * (1 + abs(eta)):
            return "right"
        raise DomainError(f"a={self.a} has no side for support {self.family.support}")

    @property
    def is_boundary(self):
        xi, eta = self.family.support
        return any(math.isfinite(e) and abs(self.a - e) <= BOUNDARY_TOL * (1 + abs(e)) for e in (xi, eta))

    @property
    def endpoint(self):
        """Support endpoint next to a."""
        xi, eta = self.family.support
        return xi if self.side == "left" else eta

    def with_mass(self, mass):
        return MeasureSpec(self.family, self.a, mass, self.christoffel_level)

    def base(self, n_max):
        return classical_recurrence(self.family, n_max)


def christoffel_step(coeffs: RecurrenceCoeffs, a) -> RecurrenceCoeffs:
    """Recurrence of the monic polynomials orthogonal for |x - a| dmu.

    beta*_n = beta_{n+1} + r_{n+1} - r_n,  gamma*_n = (r_n / r_{n-1}) gamma_n,
    with r_n = p_{n+1}(a)/p_n(a). The output is one term shorter.
    """
    m = coeffs.n_max
    if m < 2:
        raise NumericalBreakdownError("christoffel_step needs n_max >= 2")
    r = ratios(coeffs, a, m)
    beta = coeffs.beta[1 : m + 1] + r[1 : m + 1] - r[:m]
    gamma = np.zeros(m)
    gamma[1:] = r[1:m] / r[: m - 1] * coeffs.gamma[1:m]
    if np.any(gamma[1:] <= 0):
        k = int(np.argmax(gamma[1:] <= 0)) + 1
        raise NumericalBreakdownError(f"gamma*_{k} = {gamma[k]!r} at a={a!r}; a is inside the support")
    # <x - a, 1> = -r_0 mu_0; the sign flips for a on the right, where (a - x) dmu is used
    return RecurrenceCoeffs(beta, gamma, abs(r[0]) * coeffs.total_mass)


def _boundary_shift(spec: MeasureSpec, level):
    """Classical family of (x - a)^level dmu when a is a support endpoint."""
    fam = spec.family
    if spec.side == "left":
        return fam.shifted(d_alpha=level) if fam.kind == "laguerre" else fam.shifted(d_beta=level)
    return fam.shifted(d_alpha=level)


def starred_recurrence(spec: MeasureSpec, n_max, level=1) -> RecurrenceCoeffs:
    """Recurrence of p* (level 1) or p** (level 2) up to index n_max.

    At a support endpoint the exact parameter-shifted classical family is
    used; elsewhere the generic step is applied level times.
    """
    if level == 0:
        return spec.base(n_max)
    if spec.is_boundary:
        return classical_recurrence(_boundary_shift(spec, level), n_max)
    c = spec.base(n_max + level)
    for _ in range(level):
        c = christoffel_step(c, spec.a)
    return c


def christoffel_eval(spec: MeasureSpec, n, x, level=None, order=1):
    """Value and derivatives of p*_n (level 1) or p**_n (level 2) at x."""
    level = spec.christoffel_level if level is None else level
    if level < 1:
        raise DomainError("christoffel_eval needs level 1 or 2")
    c = starred_recurrence(spec, max(n, 1), level)
    return PolyEvaluator(c)(n, x, order=order)


def iterated_coeffs(coeffs: RecurrenceCoeffs, a, n):
    """(d_n, e_n) with (x-a)^2 p**_n = p_{n+2} - d_n p_{n+1} + e_n p_n.

    d_n = r_{n+1} + r*_n and e_n = r_n r*_n, where r* are the ratios of the
    starred family at a.
    """
    r = ratios(coeffs, a, n + 1)
    rs = ratios(christoffel_step(coeffs, a), a, n)
    return float(r[n + 1] + rs[n]), float(r[n] * rs[n])


@dataclass(frozen=True)
class ConnectionData:
    """Connection constants of the degree-n Uvarov polynomial."""

    n: int
    B: float  # K_{n-1}(a,a)
    c: float  # p^N_n = p*_n + c p*_{n-1}
    d: float
    e: float
    k: float  # 1 + N B

    def __post_init__(self):
        if not self.B > 0:
            raise NumericalBreakdownError(f"B_n = {self.B!r} must be positive")
        if not math.isfinite(self.c):
            raise NumericalBreakdownError("c_n is not finite")


class UvarovSystem:
    """Everything needed to evaluate p_n, p*_n, p**_n and p^N_n for one spec and degree."""

    def __init__(self, spec: MeasureSpec, n: int, extra=2):
        if n < 0:
            raise DomainError("degree must be nonnegative")
        if spec.family.kind == "hermite":
            raise DomainError("Hermite-type polynomials are built by symmetrization")
        self.spec = spec
        self.n = n
        m = n + extra + 2
        self.base = spec.base(m + 2)
        self.star = starred_recurrence(spec, m, 1)
        self.star2 = starred_recurrence(spec, m - 1, 2)
        self.r = ratios(self.base, spec.a, m)
        self.kern = KernelAccumulator.build(self.base, spec.a, m)
        self.ev = PolyEvaluator(self.base)
        self.ev_star = PolyEvaluator(self.star)
        self.ev_star2 = PolyEvaluator(self.star2)

    def c_of(self, n, mass=None):
        """c_n = -[(1 + N K_n)/(1 + N K_{n-1})] gamma_n / r_{n-1}."""
        N = self.spec.mass if mass is None else mass
        if n < 1:
            return 0.0
        K = self.kern
        return -(1 + N * K[n]) / (1 + N * K[n - 1]) * self.base.gamma[n] / self.r[n - 1]

    def B_of(self, n):
        return self.kern[n - 1]

    def connection(self, n=None):
        n = self.n if n is None else n
        if n < 1:
            raise DomainError("connection data needs n >= 1")
        rs = ratios(self.star, self.spec.a, n)
        d = self.r[n + 1] + rs[n]
        e = self.r[n] * rs[n]
        B = self.B_of(n)
        return ConnectionData(n, B, self.c_of(n), float(d), float(e), 1 + self.spec.mass * B)

    def uvarov(self, x, n=None, order=1, mass=None):
        n = self.n if n is None else n
        if n == 0:
            x = np.asarray(x, dtype=float)
            out = (np.ones_like(x),) + tuple(np.zeros_like(x) for _ in range(order))
            return tuple(v.item() for v in out) if out[0].ndim == 0 else out
        # (p_n + N B_n (x-a) p**_{n-1}) / k_n: same polynomial as p*_n + c_n p*_{n-1},
        # but without the cancellation that form suffers at x = a
        N = self.spec.mass if mass is None else mass
        NB = N * self.B_of(n)
        t = np.asarray(x) - self.spec.a
        p = self.ev(n, x, order)
        q = self.ev_star2(n - 1, x, order)
        out = [p[0] + NB * t * q[0]]
        for j in range(1, order + 1):
            # d^j/dx^j [t q] = t q^(j) + j q^(j-1)
            out.append(p[j] + NB * (t * q[j] + j * q[j - 1]))
        return tuple(v / (1 + NB) for v in out)

    def classical(self, x, n=None, order=1):
        return self.ev(self.n if n is None else n, x, order)

    def star_eval(self, x, n, order=1):
        return self.ev_star(n, x, order)

    def star2_eval(self, x, n, order=1):
        return self.ev_star2(n, x, order)

    def eqt2(self, x, n=None):
        """Normalized Uvarov value p_n + N B_n (x - a) p**_{n-1} (equals k_n p^N_n)."""
        n = self.n if n is None else n
        x = np.asarray(x, dtype=float)
        p = self.ev(n, x, 0)[0]
        q = self.ev_star2(n - 1, x, 0)[0]
        return p + self.spec.mass * self.B_of(n) * (x - self.spec.a) * q

    def kernel_form(self, x, n=None):
        """p_n - N p_n(a) K_{n-1}(a,x) / (1 + N K_{n-1}(a,a))."""
        n = self.n if n is None else n
        N, a = self.spec.mass, self.spec.a
        p = self.ev(n, x, 0)[0]
        pa = self.ev(n, a, 0)[0]
        return p - N * pa * kernel_value(self.base, a, x, n - 1) / (1 + N * self.kern[n - 1])


def uvarov_connection(spec: MeasureSpec, n) -> ConnectionData:
    return UvarovSystem(spec, n).connection(n)


def uvarov_eval(spec: MeasureSpec, n, x, order=1):
    """Monic Uvarov polynomial p^N_n and derivatives at x."""
    return UvarovSystem(spec, n).uvarov(x, n, order)


def representation_crosscheck(spec: MeasureSpec, n, xs):
    """Max relative gap between k_n (p*_n + c_n p*_{n-1}) and p_n + N B_n (x-a) p**_{n-1}."""
    sys = UvarovSystem(spec, n)
    xs = np.asarray(xs, dtype=float)
    N, a = spec.mass, spec.a
    B = sys.B_of(n)
    k = 1 + N * B
    c = sys.c_of(n)
    hi = sys.star_eval(xs, n, 0)[0]
    lo = sys.star_eval(xs, n - 1, 0)[0]
    lhs = k * (hi + c * lo)
    p = sys.classical(xs, n, 0)[0]
    t = N * B * (xs - a) * sys.star2_eval(xs, n - 1, 0)[0]
    rhs = p + t
    scale = np.maximum(np.abs(k * hi) + np.abs(k * c * lo), np.abs(p) + np.abs(t))
    return float(np.max(np.abs(lhs - rhs) / scale))
