"""Classical monic families, their recurrences, norms, ratios and kernels.

Every polynomial sequence in the library is carried as a pair of recurrence
sequences (beta_n, gamma_n) plus the total mass of the measure, so that

    p_{n+1}(x) = (x - beta_n) p_n(x) - gamma_n p_{n-1}(x),   p_0 = 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import special

from .errors import InvalidMeasureError, LengthError, NumericalBreakdownError, RatioBreakdownError

KINDS = ("jacobi", "laguerre", "hermite")

# values below this are treated as an exact zero of p_n(a)
RATIO_FLOOR = 1e-280

# relative distance below which kernel_value uses the confluent route
CONFLUENT_SWITCH = 1e-6

_RESCALE_EXP = 512
_RESCALE_LIMIT = 2.0**_RESCALE_EXP


def gamma_ratio(num, den, log2_factor=0.0):
    """prod Gamma(num) / prod Gamma(den) * 2**log2_factor, via log-gamma.

    All arguments must be positive.
    """
    num = np.atleast_1d(np.asarray(num, dtype=float))
    den = np.atleast_1d(np.asarray(den, dtype=float))
    if np.any(num <= 0) or np.any(den <= 0):
        raise ValueError("gamma_ratio needs positive arguments")
    # paired terms through the Pochhammer symbol, which avoids differencing large log-gammas
    m = min(num.size, den.size)
    s = 0.0
    for p, q in zip(num[:m], den[:m]):
        r = special.poch(q, p - q)
        s += math.log(r) if np.isfinite(r) and r > 0 else special.gammaln(p) - special.gammaln(q)
    s += special.gammaln(num[m:]).sum() - special.gammaln(den[m:]).sum()
    return float(np.exp(s + log2_factor * math.log(2.0)))


@dataclass(frozen=True)
class ClassicalFamily:
    """Jacobi (1-x)^a (1+x)^b on [-1,1], Laguerre x^a e^-x on [0,inf), Hermite e^{-x^2}."""

    kind: str
    alpha: float = 0.0
    beta: float = 0.0

    def __post_init__(self):
        kind = str(self.kind).lower()
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "beta", float(self.beta))
        if kind not in KINDS:
            raise InvalidMeasureError(f"unknown family {self.kind!r}")
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta)):
            raise InvalidMeasureError("family parameters must be finite")
        if kind == "jacobi":
            if self.alpha <= -1 or self.beta <= -1:
                raise InvalidMeasureError(f"Jacobi needs alpha, beta > -1, got {self.alpha}, {self.beta}")
        elif kind == "laguerre":
            if self.alpha <= -1:
                raise InvalidMeasureError(f"Laguerre needs alpha > -1, got {self.alpha}")
            if self.beta != 0.0:
                raise InvalidMeasureError("Laguerre takes no beta parameter")
        elif self.alpha != 0.0 or self.beta != 0.0:
            raise InvalidMeasureError("Hermite takes no parameters")

    @classmethod
    def jacobi(cls, alpha, beta):
        return cls("jacobi", alpha, beta)

    @classmethod
    def laguerre(cls, alpha):
        return cls("laguerre", alpha)

    @classmethod
    def hermite(cls):
        return cls("hermite")

    @property
    def support(self):
        """Convex hull [xi, eta] of the support."""
        if self.kind == "jacobi":
            return (-1.0, 1.0)
        if self.kind == "laguerre":
            return (0.0, math.inf)
        return (-math.inf, math.inf)

    def shifted(self, d_alpha=0.0, d_beta=0.0):
        if self.kind == "laguerre":
            return ClassicalFamily("laguerre", self.alpha + d_alpha)
        if self.kind == "jacobi":
            return ClassicalFamily("jacobi", self.alpha + d_alpha, self.beta + d_beta)
        raise InvalidMeasureError("Hermite has no parameters to shift")

    @property
    def total_mass(self):
        a, b = self.alpha, self.beta
        if self.kind == "jacobi":
            return gamma_ratio([a + 1, b + 1], [a + b + 2], log2_factor=a + b + 1)
        if self.kind == "laguerre":
            return float(special.gamma(a + 1))
        return math.sqrt(math.pi)

    def weight(self, x):
        x = np.asarray(x, dtype=float)
        if self.kind == "jacobi":
            return (1 - x) ** self.alpha * (1 + x) ** self.beta
        if self.kind == "laguerre":
            return x**self.alpha * np.exp(-x)
        return np.exp(-x * x)

    def label(self):
        if self.kind == "jacobi":
            return f"jacobi(alpha={self.alpha:g}, beta={self.beta:g})"
        if self.kind == "laguerre":
            return f"laguerre(alpha={self.alpha:g})"
        return "hermite"


@dataclass(frozen=True, eq=False)
class RecurrenceCoeffs:
    """beta[k] = beta_k for k = 0..n_max; gamma[k] = gamma_k for k = 1..n_max (gamma[0] is unused and 0)."""

    beta: np.ndarray
    gamma: np.ndarray
    total_mass: float

    def __post_init__(self):
        b = np.array(self.beta, dtype=float)
        g = np.array(self.gamma, dtype=float)
        if b.ndim != 1 or g.shape != b.shape or b.size < 1:
            raise LengthError(f"inconsistent recurrence lengths {b.shape} and {g.shape}")
        g[0] = 0.0
        if np.any(~np.isfinite(b)) or np.any(~np.isfinite(g)):
            raise NumericalBreakdownError("non-finite recurrence coefficient")
        if np.any(g[1:] <= 0):
            k = int(np.argmax(g[1:] <= 0)) + 1
            raise NumericalBreakdownError(f"gamma_{k} = {g[k]!r} is not positive")
        if not (self.total_mass > 0 and math.isfinite(self.total_mass)):
            raise NumericalBreakdownError(f"total mass {self.total_mass!r} is not positive")
        b.setflags(write=False)
        g.setflags(write=False)
        object.__setattr__(self, "beta", b)
        object.__setattr__(self, "gamma", g)
        object.__setattr__(self, "total_mass", float(self.total_mass))

    @property
    def n_max(self):
        return self.beta.size - 1

    def truncated(self, n_max):
        if n_max > self.n_max:
            raise LengthError(f"cannot extend recurrence from {self.n_max} to {n_max}")
        return RecurrenceCoeffs(self.beta[: n_max + 1], self.gamma[: n_max + 1], self.total_mass)

    def jacobi_matrix(self, n):
        """Diagonal and off-diagonal of the n x n symmetric Jacobi matrix."""
        if n > self.n_max + 1:
            raise LengthError(f"degree {n} needs beta_0..beta_{n - 1}, have {self.n_max}")
        return self.beta[:n].copy(), np.sqrt(self.gamma[1:n])

    def allclose(self, other, rtol=1e-12, atol=1e-14):
        m = min(self.n_max, other.n_max)
        return (
            np.allclose(self.beta[: m + 1], other.beta[: m + 1], rtol=rtol, atol=atol)
            and np.allclose(self.gamma[1 : m + 1], other.gamma[1 : m + 1], rtol=rtol, atol=atol)
            and math.isclose(self.total_mass, other.total_mass, rel_tol=rtol)
        )


def classical_recurrence(family: ClassicalFamily, n_max: int) -> RecurrenceCoeffs:
    """Monic recurrence coefficients beta_0..beta_{n_max}, gamma_1..gamma_{n_max}."""
    if n_max < 1:
        raise LengthError("n_max must be at least 1")
    n = np.arange(n_max + 1, dtype=float)
    a, b = family.alpha, family.beta
    gamma = np.zeros(n_max + 1)
    if family.kind == "laguerre":
        beta = 2 * n + a + 1
        gamma[1:] = n[1:] * (n[1:] + a)
    elif family.kind == "hermite":
        beta = np.zeros(n_max + 1)
        gamma[1:] = n[1:] / 2
    else:
        s = 2 * n + a + b
        beta = np.empty(n_max + 1)
        # n = 0 is written separately: the general form is 0/0 when a + b = 0
        beta[0] = (b - a) / (a + b + 2)
        beta[1:] = (b * b - a * a) / (s[1:] * (s[1:] + 2))
        gamma[1] = 4 * (1 + a) * (1 + b) / ((a + b + 2) ** 2 * (a + b + 3))
        m, t = n[2:], s[2:]
        gamma[2:] = 4 * m * (m + a) * (m + b) * (m + a + b) / ((t - 1) * t * t * (t + 1))
    return RecurrenceCoeffs(beta, gamma, family.total_mass)


class PolyEvaluator:
    """Evaluates p_n and its derivatives by the recurrence.

    Running values are rescaled by powers of two whenever they grow past
    2**512, and the accumulated exponent is applied at the end, so the
    intermediate recurrence never overflows.
    """

    def __init__(self, coeffs: RecurrenceCoeffs):
        self.coeffs = coeffs

    def scaled(self, n, x, order=1):
        """Return ([p, p', ...], exponent) with p^(d)(x) = vals[d] * 2**exponent."""
        c = self.coeffs
        if n < 0:
            raise ValueError("degree must be nonnegative")
        if n > c.n_max + 1:
            raise LengthError(f"degree {n} exceeds prepared coefficients (n_max={c.n_max})")
        x = np.asarray(x)
        dtype = complex if np.iscomplexobj(x) else float
        x = x.astype(dtype)
        prev = [np.zeros_like(x) for _ in range(order + 1)]
        cur = [np.ones_like(x)] + [np.zeros_like(x) for _ in range(order)]
        expo = np.zeros(x.shape, dtype=int)
        b, g = c.beta, c.gamma
        for k in range(n):
            t = x - b[k]
            nxt = [t * cur[0] - g[k] * prev[0]]
            for d in range(1, order + 1):
                nxt.append(d * cur[d - 1] + t * cur[d] - g[k] * prev[d])
            prev, cur = cur, nxt
            big = np.zeros(x.shape, dtype=bool)
            for v in cur:
                big |= np.abs(v) > _RESCALE_LIMIT
            if np.any(big):
                f = np.where(big, 2.0**-_RESCALE_EXP, 1.0)
                cur = [v * f for v in cur]
                prev = [v * f for v in prev]
                expo = expo + np.where(big, _RESCALE_EXP, 0)
        return cur, expo

    def __call__(self, n, x, order=1):
        vals, expo = self.scaled(n, x, order)
        with np.errstate(over="ignore"):
            f = np.ldexp(1.0, expo)
            out = tuple(v * f for v in vals)
        if np.ndim(x) == 0:
            return tuple(v.item() for v in out)
        return out


def eval_with_derivative(ev, n, x):
    """(p_n(x), p_n'(x)); `ev` may be a PolyEvaluator or RecurrenceCoeffs."""
    if isinstance(ev, RecurrenceCoeffs):
        ev = PolyEvaluator(ev)
    return ev(n, x, order=1)


def eval_derivatives(coeffs, n, x, order=2):
    return PolyEvaluator(coeffs)(n, x, order=order)


def ratios(coeffs: RecurrenceCoeffs, a, n):
    """r_k = p_{k+1}(a)/p_k(a) for k = 0..n, by r_k = (a - beta_k) - gamma_k / r_{k-1}."""
    if n > coeffs.n_max:
        raise LengthError(f"ratio r_{n} needs beta_{n}, have n_max={coeffs.n_max}")
    b, g = coeffs.beta, coeffs.gamma
    r = np.empty(n + 1)
    r[0] = a - b[0]
    for k in range(1, n + 1):
        if abs(r[k - 1]) < RATIO_FLOOR:
            raise RatioBreakdownError(f"p_{k}(a) vanished at a={a!r}")
        r[k] = (a - b[k]) - g[k] / r[k - 1]
    if abs(r[n]) < RATIO_FLOOR:
        raise RatioBreakdownError(f"p_{n + 1}(a) vanished at a={a!r}")
    return r


def ratio_at(coeffs: RecurrenceCoeffs, a, n):
    return float(ratios(coeffs, a, n)[n])


def orthonormal_values(coeffs: RecurrenceCoeffs, x, n):
    """Rows p^_0(x)..p^_n(x) of the orthonormal polynomials p_j/||p_j||."""
    if n > coeffs.n_max:
        raise LengthError(f"orthonormal p_{n} needs gamma_{n}, have n_max={coeffs.n_max}")
    x = np.asarray(x, dtype=float)
    out = np.empty((n + 1,) + x.shape)
    sq = np.sqrt(coeffs.gamma)
    out[0] = 1.0 / math.sqrt(coeffs.total_mass)
    if n >= 1:
        out[1] = (x - coeffs.beta[0]) * out[0] / sq[1]
    for k in range(1, n):
        out[k + 1] = ((x - coeffs.beta[k]) * out[k] - sq[k] * out[k - 1]) / sq[k + 1]
    return out


@dataclass(frozen=True, eq=False)
class KernelAccumulator:
    """Partial sums K_0(a,a), ..., K_n(a,a) at a fixed point a."""

    a: float
    sums: np.ndarray = field(repr=False)

    @classmethod
    def build(cls, coeffs, a, n):
        s = np.cumsum(orthonormal_values(coeffs, a, n) ** 2)
        s.setflags(write=False)
        return cls(float(a), s)

    def __getitem__(self, n):
        if n < 0:
            return 0.0
        return float(self.sums[n])


def kernel_diag(coeffs: RecurrenceCoeffs, a, n):
    """K_n(a,a) = sum_{j<=n} p_j(a)^2/||p_j||^2."""
    if n < 0:
        return 0.0
    return KernelAccumulator.build(coeffs, a, n)[n]


def kernel_direct(coeffs, a, x, n):
    """K_n(x,a) by direct summation of orthonormal products."""
    pa = orthonormal_values(coeffs, a, n)
    px = orthonormal_values(coeffs, x, n)
    pa = pa.reshape(pa.shape + (1,) * (px.ndim - 1))
    return (pa * px).sum(axis=0)


def kernel_confluent(coeffs, x, n):
    """K_n(x,x) from the confluent Christoffel-Darboux form."""
    c = coeffs
    if n + 1 > c.n_max:
        raise LengthError(f"confluent kernel of order {n} needs gamma_{n + 1}")
    p1, d1 = PolyEvaluator(c)(n + 1, x)
    p0, d0 = PolyEvaluator(c)(n, x)
    return (d1 * p0 - d0 * p1) / squared_norm(c, n)


def kernel_value(coeffs: RecurrenceCoeffs, a, x, n):
    """K_n(x,a): Christoffel-Darboux quotient away from a, direct sum near a."""
    x_arr = np.asarray(x, dtype=float)
    if n == 0:
        out = np.full(x_arr.shape, 1.0 / coeffs.total_mass)
        return out.item() if out.ndim == 0 else out
    if n + 1 > coeffs.n_max:
        return kernel_direct(coeffs, a, x, n)
    near = np.abs(x_arr - a) <= CONFLUENT_SWITCH * (1 + abs(a))
    ev = PolyEvaluator(coeffs)
    x_far = np.where(near, a + 1.0, x_arr)
    pn1_x, _ = ev(n + 1, x_far)
    pn_x, _ = ev(n, x_far)
    pn1_a, _ = ev(n + 1, a)
    pn_a, _ = ev(n, a)
    cd = (pn1_x * pn_a - pn_x * pn1_a) / ((x_far - a) * squared_norm(coeffs, n))
    out = np.where(near, kernel_direct(coeffs, a, x_arr, n), cd)
    return out.item() if out.ndim == 0 else out


def squared_norm(coeffs: RecurrenceCoeffs, n):
    """||p_n||^2 = mu_0 * gamma_1 ... gamma_n."""
    if n > coeffs.n_max:
        raise LengthError(f"||p_{n}||^2 needs gamma_{n}")
    return coeffs.total_mass * math.prod(coeffs.gamma[1 : n + 1].tolist())


# closed forms at the support endpoints


def laguerre_at_zero(alpha, n):
    """Monic L_n^alpha(0) = (-1)^n Gamma(n+alpha+1)/Gamma(alpha+1)."""
    return (-1) ** n * gamma_ratio([n + alpha + 1], [alpha + 1])


def laguerre_kernel_at_zero(alpha, n):
    """K_n(0,0) for Laguerre alpha: Gamma(n+alpha+2)/(n! Gamma(alpha+1) Gamma(alpha+2))."""
    return gamma_ratio([n + alpha + 2], [n + 1, alpha + 1, alpha + 2])


def jacobi_at_minus_one(alpha, beta, n):
    """Monic P_n^{alpha,beta}(-1)."""
    if n == 0:
        return 1.0
    v = gamma_ratio([n + beta + 1, n + alpha + beta + 1], [beta + 1, 2 * n + alpha + beta + 1], log2_factor=n)
    return (-1) ** n * v


def jacobi_kernel_at_minus_one(alpha, beta, n):
    """K_n(-1,-1) for Jacobi (alpha, beta)."""
    m = n + 1
    return gamma_ratio(
        [m + beta + 1, m + alpha + beta + 1],
        [m, beta + 1, beta + 2, m + alpha],
        log2_factor=-(alpha + beta + 1),
    )


def jacobi_kernel_at_one(alpha, beta, n):
    """K_n(1,1) for Jacobi (alpha, beta), by the reflection x -> -x."""
    return jacobi_kernel_at_minus_one(beta, alpha, n)


# quadrature and discretized measures


def gauss_rule(family: ClassicalFamily, m):
    """m-point Gauss rule of the classical weight, from scipy's tabulated routines."""
    if family.kind == "jacobi":
        x, w = special.roots_jacobi(m, family.alpha, family.beta)
    elif family.kind == "laguerre":
        x, w = special.roots_genlaguerre(m, family.alpha)
    else:
        x, w = special.roots_hermite(m)
    return np.asarray(x, dtype=float), np.asarray(w, dtype=float)


def lanczos_recurrence(nodes, weights, n_max):
    """Recurrence coefficients of the discrete measure sum w_i delta_{x_i}.

    Lanczos with full reorthogonalization on diag(nodes); exact for degrees
    below the number of nodes.
    """
    x = np.asarray(nodes, dtype=float)
    w = np.asarray(weights, dtype=float)
    if np.any(w < 0):
        raise NumericalBreakdownError("discrete measure needs nonnegative weights")
    if n_max + 1 > x.size:
        raise LengthError("need more nodes than recurrence terms")
    mu0 = w.sum()
    q = np.sqrt(w / mu0)
    basis = [q]
    beta = np.zeros(n_max + 1)
    gamma = np.zeros(n_max + 1)
    for k in range(n_max + 1):
        v = x * basis[k]
        beta[k] = basis[k] @ v
        if k == n_max:
            break
        for u in basis:
            v = v - (u @ v) * u
        for u in basis:
            v = v - (u @ v) * u
        nrm = np.linalg.norm(v)
        gamma[k + 1] = nrm * nrm
        basis.append(v / nrm)
    return RecurrenceCoeffs(beta, gamma, mu0)
