"""Electrostatic model for the zeros of the Uvarov polynomials.

The starred functional satisfies a Pearson equation D(phi u*) = psi u*, and
the kernel polynomials a structure relation

    phi (p*_n)' = A(x,n) p*_n + B(x,n) p*_{n-1}.

From p^N_n = p*_n + c_n p*_{n-1} one gets phi (p^N_n)' = A* p*_n + B* p*_{n-1},
a second order ODE for p^N_n, and the equilibrium conditions

    psi/phi (x_j) - Q'/Q (x_j) + 2 sum_{k != j} 1/(x_j - x_k) = 0,

with Q = B* - c_n A*. Four settings are covered:

    laguerre_a0   Laguerre, mass at 0
    laguerre_neg  Laguerre, mass at a < 0
    jacobi_m1     Jacobi, mass at -1
    jacobi_neg    Jacobi, mass at a outside [-1, 1]
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import Polynomial as P

from .core import ClassicalFamily, RecurrenceCoeffs, classical_recurrence, ratios
from .errors import DomainError, PoleError, SingularConfigurationError, StructureRelationError
from .transforms import MeasureSpec, UvarovSystem, starred_recurrence
from .zeros import hermite_type_zeros, laguerre_rate, local_offsets

CASES = ("laguerre_a0", "laguerre_neg", "jacobi_m1", "jacobi_neg")
LADDER_TOL = 1e-9
X = P([0.0, 1.0])


def _poly(c):
    return P(np.atleast_1d(np.asarray(c, dtype=float)))


def classical_pearson(family: ClassicalFamily):
    """(sigma, tau) with D(sigma w) = tau w."""
    a, b = family.alpha, family.beta
    if family.kind == "laguerre":
        return X, P([a + 1, -1.0])
    if family.kind == "jacobi":
        return P([1.0, 0.0, -1.0]), P([b - a, -(a + b + 2)])
    raise DomainError("no Pearson data for Hermite here")


def classical_structure(family: ClassicalFamily, n):
    """(a_n(x), b_n) with sigma p_n' = a_n(x) p_n + b_n p_{n-1} for the monic family."""
    al, be = family.alpha, family.beta
    if n == 0:
        return P([0.0]), 0.0
    if family.kind == "laguerre":
        return P([float(n)]), n * (n + al)
    s = 2 * n + al + be
    an = P([-n * (be - al) / s, -float(n)])
    if n == 1:
        bn = 4 * (1 + al) * (1 + be) / (al + be + 2) ** 2
    else:
        bn = 4 * n * (n + al) * (n + be) * (n + al + be) / (s * s * (s - 1))
    return an, bn


@dataclass(frozen=True)
class PearsonPair:
    phi: P
    psi: P

    def __post_init__(self):
        if self.phi.degree() > 3 or self.psi.degree() > 2:
            raise DomainError("Pearson pair degrees exceed (3, 2)")

    def ratio(self, x):
        return self.psi(x) / self.phi(x)


def pearson_star(family: ClassicalFamily, a) -> PearsonPair:
    """Pearson pair of (x - a) times the classical weight."""
    sigma, tau = classical_pearson(family)
    xi, eta = family.support
    if abs(sigma(a)) < 1e-14:
        st, rem = divmod(sigma, P([-a, 1.0]))
        return PearsonPair(sigma, st + tau)
    if xi < a < eta:
        raise DomainError(f"a={a} lies inside the support")
    return PearsonPair(P([-a, 1.0]) * sigma, 2 * sigma + P([-a, 1.0]) * tau)


def case_of(spec: MeasureSpec):
    fam, a = spec.family, spec.a
    if fam.kind == "laguerre":
        return "laguerre_a0" if spec.is_boundary else "laguerre_neg"
    if fam.kind == "jacobi":
        if spec.is_boundary:
            if spec.side == "left":
                return "jacobi_m1"
            raise DomainError("a mass at +1 is not one of the electrostatic settings")
        return "jacobi_neg"
    raise DomainError("Hermite has no electrostatic setting here")


def _default_a(case):
    return {"laguerre_a0": 0.0, "jacobi_m1": -1.0}.get(case)


def _spec_for(case, family, a, mass=0.0):
    if case not in CASES:
        raise DomainError(f"unknown case {case!r}; expected one of {CASES}")
    a = _default_a(case) if a is None else float(a)
    if a is None:
        raise DomainError(f"case {case} needs a mass point a")
    spec = MeasureSpec(family, a, mass)
    if case_of(spec) != case:
        raise DomainError(f"{family.label()} with a={a} is case {case_of(spec)}, not {case}")
    return spec


@dataclass(frozen=True, eq=False)
class StructureRelation:
    """phi (p*_n)' = A(x,n) p*_n + B(x,n) p*_{n-1} for one electrostatic setting."""

    case: str
    family: ClassicalFamily
    a: float
    pearson: PearsonPair
    base: RecurrenceCoeffs = field(repr=False)
    starred: RecurrenceCoeffs = field(repr=False)
    lam: np.ndarray = field(repr=False)  # lam[k] = p_{k+1}(a)/p_k(a) for the base family
    b_shift: float = 0.0  # only for negative controls

    @property
    def phi(self):
        return self.pearson.phi

    @property
    def psi(self):
        return self.pearson.psi

    def _boundary_family(self):
        if self.case == "laguerre_a0":
            return self.family.shifted(d_alpha=1)
        return self.family.shifted(d_beta=1)

    def _exterior(self, n):
        """(U, W) with (x-a) sigma (p*_n)' = U p_n - W p_{n-1} - sigma p*_n."""
        an1, bn1 = classical_structure(self.family, n + 1)
        an, bn = classical_structure(self.family, n)
        b, g, lam = self.base.beta, self.base.gamma, self.lam
        U = an1 * P([-b[n], 1.0]) + bn1 - lam[n] * an
        W = an1 * g[n] + lam[n] * bn
        return U, W

    def A(self, n):
        if n == 0:
            return P([0.0])
        if self.case in ("laguerre_a0", "jacobi_m1"):
            return classical_structure(self._boundary_family(), n)[0]
        sigma, _ = classical_pearson(self.family)
        U, W = self._exterior(n)
        return U - W / self.lam[n - 1] - sigma

    def B(self, n):
        if n == 0:
            return P([0.0])
        if self.case in ("laguerre_a0", "jacobi_m1"):
            out = P([classical_structure(self._boundary_family(), n)[1]])
        else:
            U, W = self._exterior(n)
            l1 = self.lam[n - 1]
            bs = self.starred.beta[n - 1]
            g = self.base.gamma[n]
            out = -(U * g / l1) - W + W * P([-bs, 1.0]) / l1
        return out + self.b_shift


def structure_relation(case, family: ClassicalFamily, n, a=None, b_shift=0.0, verify=True) -> StructureRelation:
    """Build (phi, A, B) for a setting and check the consistency identity at degree n."""
    spec = _spec_for(case, family, a)
    m = n + 4
    base = spec.base(m + 1)
    star = starred_recurrence(spec, m, 1)
    lam = ratios(base, spec.a, m)
    sr = StructureRelation(case, family, spec.a, pearson_star(family, spec.a), base, star, lam, b_shift)
    if verify and n >= 2:
        res = ladder_identity_check(sr, star, n, sample_points(family, n))
        if res > LADDER_TOL:
            raise StructureRelationError(f"{case}: consistency residual {res:.3e} at n={n}")
    return sr


def sample_points(family, n, count=50, seed=0):
    rng = np.random.default_rng(seed + 7919 * n)
    if family.kind == "jacobi":
        return rng.uniform(-1.5, 1.5, count)
    return rng.uniform(-1.0, 4.0 * n + 10.0, count)


def ladder_identity_check(sr: StructureRelation, starred: RecurrenceCoeffs, n, xs):
    """max |A(n) + A(n-1) + (x - beta*_{n-1}) B(n-1)/gamma*_{n-1} - (phi' - psi)|, relative."""
    if n < 2:
        raise DomainError("identity needs n >= 2")
    xs = np.asarray(xs, dtype=float)
    bs, gs = starred.beta[n - 1], starred.gamma[n - 1]
    t1, t2 = sr.A(n)(xs), sr.A(n - 1)(xs)
    t3 = (xs - bs) * sr.B(n - 1)(xs) / gs
    rhs = sr.phi.deriv()(xs) - sr.psi(xs)
    scale = np.abs(t1) + np.abs(t2) + np.abs(t3) + np.abs(rhs)
    return float(np.max(np.abs(t1 + t2 + t3 - rhs) / np.maximum(scale, 1e-300)))


def star_AB(sr: StructureRelation, c, starred: RecurrenceCoeffs, n):
    """(A*, B*) with phi (p^N_n)' = A* p*_n + B* p*_{n-1}."""
    bs, gs = starred.beta[n - 1], starred.gamma[n - 1]
    Bm = sr.B(n - 1)
    A_star = sr.A(n) - (c / gs) * Bm
    B_star = sr.B(n) + c * sr.A(n - 1) + (c / gs) * P([-bs, 1.0]) * Bm
    return A_star, B_star


def _real_roots(q: P):
    c = np.trim_zeros(q.coef, "b")
    if c.size <= 1:
        return ()
    if c.size == 2:
        return (-c[0] / c[1],)
    s, b, a = c[0], c[1], c[2]
    disc = b * b - 4 * a * s
    if disc < 0:
        return ()
    t = -0.5 * (b + math.copysign(math.sqrt(disc), b))
    r = sorted([t / a, s / t] if t != 0 else [0.0, 0.0])
    return tuple(r)


@dataclass(frozen=True)
class QPolynomial:
    case: str
    n: int
    mass: float
    c: float
    assembled: P
    closed_form: P | None
    roots: tuple  # real zeros; empty when they are a complex pair
    complex_roots: tuple = ()

    @property
    def poly(self):
        return self.assembled

    def consistency(self):
        """Coefficientwise relative gap between the closed form and the assembly."""
        if self.closed_form is None:
            return 0.0
        a = self.assembled.coef
        b = self.closed_form.coef
        k = max(a.size, b.size)
        a = np.pad(a, (0, k - a.size))
        b = np.pad(b, (0, k - b.size))
        return float(np.max(np.abs(a - b)) / np.max(np.abs(a)))


class ElectroSystem:
    """Structure relation, Uvarov data and derived polynomials for one (setting, n, N)."""

    def __init__(self, case, family, n, mass, a=None):
        if n < 2:
            raise DomainError("the electrostatic model needs n >= 2")
        self.spec = _spec_for(case, family, a, mass)
        self.case = case
        self.n = n
        self.mass = float(mass)
        self.uv = UvarovSystem(self.spec, n)
        self.sr = structure_relation(case, family, n, self.spec.a)
        self.starred = self.sr.starred
        self.c = self.uv.c_of(n)
        self.A_star, self.B_star = star_AB(self.sr, self.c, self.starred, n)
        self.Q = self.B_star - self.c * self.A_star

    @classmethod
    def from_spec(cls, spec: MeasureSpec, n):
        return cls(case_of(spec), spec.family, n, spec.mass, spec.a)

    def q_closed_form(self):
        n, c, fam = self.n, self.c, self.spec.family
        al, be, a = fam.alpha, fam.beta, self.spec.a
        if self.case == "laguerre_a0":
            return P([n * (n + al + 1) - c * (2 * n + 1 + al - c), c])
        if self.case == "jacobi_m1":
            s = 2 * n + al + be
            Bn = self.sr.B(n).coef[0]
            return P([Bn + c * (s * c - (al + be + 1) * (be - al + 1) / (s + 1)), (s + 1) * c])
        if self.case == "laguerre_neg":
            lam = self.sr.lam
            an, an1 = lam[n], lam[n - 1]
            r1 = n * (n + al) * an / an1 + c * c - c * (a + al + 1 + 2 * n)
            s = (n + 1 + an) * ((n + 1 + an + al) * (2 * n + 1 + an + al - a - 2 * c) + 2 * a * c)
            s += a * al * c + c * c * (an - an1 + 1 - a)
            return P([s, r1, c])
        # jacobi_neg, coefficient by coefficient
        A = np.pad(self.sr.A(n).coef, (0, 3))[:3]
        B = np.pad(self.sr.B(n).coef, (0, 3))[:3]
        Bm = np.pad(self.sr.B(n - 1).coef, (0, 3))[:3]
        g = self.starred.gamma[n - 1]
        q2 = B[2] + (al + be + 1 - 2 * A[2] + c * Bm[2] / g) * c
        q1 = c * c * Bm[1] / g + B[1] - (al * (a - 1) + be * (a + 1) + 2 * A[1]) * c
        q0 = B[0] - (2 * A[0] + 1 + a * (al - be)) * c + c * c * Bm[0] / g
        return P([q0, q1, q2])

    def laguerre_neg_r_alt(self):
        """Alternative closed form of the linear Q coefficient for laguerre_neg."""
        n, c, a, al = self.n, self.c, self.spec.a, self.spec.family.alpha
        an = self.sr.lam[n]
        return (c + an) * (c - an) - (c - an) * a - (c + an) * (2 * n + al + 1)

    def q_polynomial(self):
        q = self.Q
        roots = _real_roots(q)
        cplx = ()
        if not roots and np.trim_zeros(q.coef, "b").size == 3:
            cplx = tuple(complex(z) for z in q.roots())
        return QPolynomial(self.case, self.n, self.mass, self.c, q, self.q_closed_form(), roots, cplx)

    # second order equation

    def ode(self):
        """Coefficients in t = x - a, where the factors of phi and Q vanishing at a stay exact."""
        shift = P([self.spec.a, 1.0])
        phi, _, Q = self.local_frame()
        A, B = self.sr.A(self.n)(shift), self.sr.B(self.n)(shift)
        return OdeCoefficients(phi, Q, A, B, self.A_star(shift), self.B_star(shift), self.c, self.spec.a)

    def third_relation_residual(self, xs):
        """phi (p^N_n)' against A* p*_n + B* p*_{n-1}, relative."""
        xs = np.asarray(xs, dtype=float)
        d = self.uv.uvarov(xs, self.n, 1)[1]
        hi = self.uv.star_eval(xs, self.n, 0)[0]
        lo = self.uv.star_eval(xs, self.n - 1, 0)[0]
        lhs = self.sr.phi(xs) * d
        t1, t2 = self.A_star(xs) * hi, self.B_star(xs) * lo
        scale = np.abs(lhs) + np.abs(t1) + np.abs(t2)
        return float(np.max(np.abs(lhs - t1 - t2) / scale))

    def ode_residual(self, xs):
        xs = np.asarray(xs, dtype=float)
        p, d1, d2 = self.uv.uvarov(xs, self.n, 2)
        return self.ode().residual(xs, p, d1, d2)

    # equilibrium, in the local variable t = x - a

    def local_frame(self):
        """(phi, psi, Q) as polynomials in t = x - a.

        phi(a) = 0 in every setting, so its constant term is set to zero. Q(a)
        is tiny when a zero is captured near a and loses all precision when
        summed from the coefficients; it is taken from the cancellation-free
        Q(a) = -A*(a) p^N_n(a) / p*_{n-1}(a), with p^N_n(a) = p_n(a)/(1 + N K_{n-1}(a,a)).
        """
        a, n = self.spec.a, self.n
        shift = P([a, 1.0])
        phi = self.sr.phi(shift)
        phi = P(np.concatenate([[0.0], phi.coef[1:]]))
        psi = self.sr.psi(shift)
        q = self.Q(shift).coef.copy()
        if self.mass == 0:
            # without the mass the equation is the classical one times a power
            # of (x - a), and Q is exactly that power
            return phi, psi, P(np.concatenate([np.zeros(q.size - 1), q[-1:]]))
        pN_a = self.uv.classical(a, n, 0)[0] / (1 + self.mass * self.uv.B_of(n))
        q[0] = -self.A_star(a) * pN_a / self.uv.star_eval(a, n - 1, 0)[0]
        return phi, psi, P(q)

    def local_zeros(self):
        return local_offsets(self.spec, self.n, self.uv)

    def potential(self, x):
        """V(x) = -integral(psi/phi) + ln|Q(x)|, up to an additive constant."""
        return self.local_potential(np.asarray(x, dtype=float) - self.spec.a)

    def local_potential(self, t):
        phi, psi, Q = self.local_frame()
        return external_potential(PearsonPair(phi, psi), Q, t)

    def energy(self, z):
        return self.local_energy(np.asarray(z, dtype=float) - self.spec.a)

    def local_energy(self, t):
        t = np.asarray(t, dtype=float)
        i, j = np.triu_indices(t.size, 1)
        return float(np.sum(self.local_potential(t)) - 2 * np.sum(np.log(np.abs(t[i] - t[j]))))

    def equilibrium(self, z=None):
        """Per-point residuals of the equilibrium conditions, relative to the term sizes.

        z are absolute positions; by default the zeros of p^N_n are used,
        resolved in the local variable.
        """
        t = self.local_zeros() if z is None else np.asarray(z, dtype=float) - self.spec.a
        return self.local_equilibrium(t)

    def local_equilibrium(self, t):
        t = np.asarray(t, dtype=float)
        phi_t, psi_t, Q_t = self.local_frame()
        phi = phi_t(t)
        if np.any(t == 0) or np.any(phi == 0):
            raise SingularConfigurationError("phi vanishes at a configuration point")
        Q = Q_t(t)
        if np.any(Q == 0):
            raise SingularConfigurationError("Q vanishes at a configuration point")
        t1 = psi_t(t) / phi
        t2 = Q_t.deriv()(t) / Q
        diff = t[:, None] - t[None, :]
        np.fill_diagonal(diff, np.inf)
        pair = 2 / diff
        t3 = pair.sum(axis=1)
        scale = np.abs(t1) + np.abs(t2) + np.abs(pair).sum(axis=1)
        return np.abs(t1 - t2 + t3) / scale


@dataclass(frozen=True, eq=False)
class OdeCoefficients:
    """calA p'' + calB p' + calC p = 0 for p = p^N_n, the polynomials taken in x - origin."""

    phi: P
    Q: P
    A: P
    B: P
    A_star: P
    B_star: P
    c: float
    origin: float = 0.0

    def _check(self, x):
        q = self.Q(x)
        scale = np.max(np.abs(self.Q.coef)) * (1 + np.abs(x)) ** max(self.Q.degree(), 0)
        if np.any(np.abs(q) <= 1e-15 * scale):
            raise PoleError("Q vanishes at an evaluation point")
        return q

    def evaluate(self, x):
        x = np.asarray(x, dtype=float) - self.origin
        q = self._check(x)
        phi, dphi = self.phi(x), self.phi.deriv()(x)
        dq = self.Q.deriv()(x)
        A, B, As, Bs = self.A(x), self.B(x), self.A_star(x), self.B_star(x)
        dBs = self.B_star.deriv()(x)
        c = self.c
        calA = c * phi * phi / q
        calB = phi * (B - Bs + c * (dphi - A)) / q - c * phi * phi * dq / (q * q)
        calC = (A * Bs - B * As) / q - phi * (dBs * q - Bs * dq) / (q * q)
        return calA, calB, calC

    def cleared(self):
        """Q^2 (calA, calB, calC) as polynomials, less the power of (x - origin) in Q^2.

        With no mass Q is a pure power of x - a and the three numerators carry
        its square; the low coefficients that should vanish hold only rounding
        noise, so they are dropped rather than left to cancel near a.
        """
        phi, Q, c = self.phi, self.Q, self.c
        dphi, dQ = phi.deriv(), Q.deriv()
        nA = c * phi * phi * Q
        nB = phi * Q * (self.B - self.B_star + c * (dphi - self.A)) - c * phi * phi * dQ
        nC = Q * (self.A * self.B_star - self.B * self.A_star) - phi * (self.B_star.deriv() * Q - self.B_star * dQ)
        k = 2 * int(np.argmax(Q.coef != 0))
        return tuple(P(q.coef[k:]) for q in (nA, nB, nC))

    def residual(self, x, p, dp, d2p):
        x = np.asarray(x, dtype=float)
        calA, calB, calC = (q(x - self.origin) for q in self.cleared())
        terms = np.abs(np.stack([calA * d2p, calB * dp, calC * p]))
        return float(np.max(np.abs(calA * d2p + calB * dp + calC * p) / np.max(terms, axis=0)))


def external_potential(pearson: PearsonPair, Q: P, x):
    """-integral(psi/phi) + ln|Q|, the integral by partial fractions over the roots of phi."""
    x = np.asarray(x, dtype=float)
    quo, rem = divmod(pearson.psi, pearson.phi)
    out = -quo.integ()(x)
    c = pearson.phi.coef
    if c[0] == 0:
        roots = np.concatenate([[0.0], np.atleast_1d(P(c[1:]).roots())])
    else:
        roots = pearson.phi.roots()
    roots = np.real_if_close(roots)
    dphi = pearson.phi.deriv()
    for r in np.atleast_1d(roots):
        res = rem(r) / dphi(r)
        out = out - res * np.log(np.abs(x - r))
    return out + np.log(np.abs(Q(x)))


# convenience wrappers over ElectroSystem


def q_polynomial(case, family, n, mass, a=None) -> QPolynomial:
    return ElectroSystem(case, family, n, mass, a).q_polynomial()


def ode_coefficients(case, family, n, mass, a=None) -> OdeCoefficients:
    return ElectroSystem(case, family, n, mass, a).ode()


@dataclass(frozen=True)
class EquilibriumReport:
    zeros: tuple
    residuals: tuple
    energy: float
    neighbour_energies: tuple
    lowest_among_samples: bool

    @property
    def max_residual(self):
        return max(self.residuals) if self.residuals else 0.0

    def to_dict(self):
        return {
            "zeros": list(self.zeros),
            "residuals": list(self.residuals),
            "energy": self.energy,
            "neighbour_energies": list(self.neighbour_energies),
            "lowest_among_samples": self.lowest_among_samples,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            tuple(d["zeros"]), tuple(d["residuals"]), d["energy"], tuple(d["neighbour_energies"]), d["lowest_among_samples"]
        )


def equilibrium_residual(spec: MeasureSpec, n, samples=10, step=1e-4, seed=0) -> EquilibriumReport:
    """Equilibrium residuals at the zeros of p^N_n and energies of nearby configurations."""
    es = ElectroSystem.from_spec(spec, n)
    t = es.local_zeros()
    res = es.local_equilibrium(t)
    E0 = es.local_energy(t)
    rng = np.random.default_rng(seed)
    # relative jitter keeps every charge on its side of a
    near = [es.local_energy(t * (1 + step * rng.standard_normal(t.size))) for _ in range(samples)]
    z = t + spec.a
    return EquilibriumReport(tuple(z), tuple(res), E0, tuple(near), bool(all(E0 < e for e in near)))


@dataclass(frozen=True)
class TrendReport:
    label: str
    xs: tuple
    values: tuple
    target: float
    approaching: bool

    def to_dict(self):
        return {"label": self.label, "xs": list(self.xs), "values": list(self.values), "target": self.target,
                "approaching": self.approaching}


def _approaching(values, target):
    d = np.abs(np.asarray(values) - target)
    return bool(np.all(np.diff(d) < 0))


def q_zero_trend(case, family, n_list, mass) -> TrendReport:
    """Ratio of the zero of Q to its large-n asymptote, per n."""
    al, be = family.alpha, family.beta
    vals = []
    for n in n_list:
        q = q_polynomial(case, family, n, mass)
        u = q.roots[0]
        if case == "laguerre_a0":
            pred = (al + 1) * math.gamma(al + 2) ** 2 / mass * n ** (-al - 2)
            vals.append(u / pred)
        elif case == "jacobi_m1":
            pred = 2 ** (al + be + 2) * (be + 1) * math.gamma(be + 2) ** 2 / mass * n ** (-2 * (be + 2))
            vals.append((u + 1) / pred)
        else:
            raise DomainError("asymptotic zero trend is only available for laguerre_a0 and jacobi_m1")
    return TrendReport(f"{case} u_n/asymptote", tuple(n_list), tuple(vals), 1.0, _approaching(vals, 1.0))


def laguerre_coeff_trends(alpha, a, n_list):
    """n (beta*_n/beta_n - 1) -> 1/2 and n (gamma*_n/gamma_n - 1) -> 1 for a mass-free shift at a < 0."""
    if a >= 0:
        raise DomainError("needs a < 0")
    fam = ClassicalFamily.laguerre(alpha)
    spec = MeasureSpec(fam, a, 0.0, 1)
    m = max(n_list) + 2
    base = spec.base(m + 1)
    star = starred_recurrence(spec, m, 1)
    nb = [n * (star.beta[n] / base.beta[n] - 1) for n in n_list]
    ng = [n * (star.gamma[n] / base.gamma[n] - 1) for n in n_list]
    return (
        TrendReport("n(beta*/beta - 1)", tuple(n_list), tuple(nb), 0.5, _approaching(nb, 0.5)),
        TrendReport("n(gamma*/gamma - 1)", tuple(n_list), tuple(ng), 1.0, _approaching(ng, 1.0)),
    )


def hermite_rate_trend(n, masses):
    """N h^2 -> g_n(-1/2), with h the smallest positive zero of the degree-2n Hermite-type polynomial."""
    g = laguerre_rate(-0.5, n)
    vals = [N * hermite_type_zeros(N, 2 * n).zeros[n] ** 2 for N in masses]
    return TrendReport(f"N h_(2n,n)^2, n={n}", tuple(masses), tuple(vals), g, _approaching(vals, g))


def laguerre_neg_closed_forms(family, a, n):
    """A(x,n), B(x,n) in the simplified closed form for a Laguerre mass at a < 0."""
    al = family.alpha
    lam = ratios(classical_recurrence(family, n + 3), a, n + 1)
    an, an1 = lam[n], lam[n - 1]
    A = n * P([-(n + 1 + an) * (1 + (n + al) / an1), 1.0])
    B = n * (n + al) / an1 * P([-(n + 1 + an) * (n + 1 + an + al), an])
    return A, B

