"""Zeros of classical and perturbed families and their behaviour in the mass N.

Classical zeros come from the symmetric Jacobi matrix. Uvarov zeros are
bracketed by the interlacing chains

    a <= xi:   a < xN_1 < x_1 < x**_1 < xN_2 < ... < x**_{n-1} < xN_n < x_n
    a >= eta:  x_1 < xN_1 < x**_1 < x_2 < ... < x**_{n-1} < x_n < xN_n < a

(x_k zeros of p_n, x**_k zeros of p**_{n-1}) and refined by bisection and
a short Newton polish.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy.linalg import eigh_tridiagonal

from ._parallel import grid_map
from .core import (
    ClassicalFamily,
    PolyEvaluator,
    RecurrenceCoeffs,
    classical_recurrence,
    gamma_ratio,
    gauss_rule,
    lanczos_recurrence,
)
from .errors import BracketFailureError, DomainError, NumericalBreakdownError
from .transforms import MeasureSpec, UvarovSystem, starred_recurrence

BISECT_RTOL = 1e-13
NUDGE = 1e-12
MONOTONE_SLACK = 1e-12
MAX_NEWTON = 4


@dataclass(frozen=True)
class ZeroSet:
    degree: int
    zeros: tuple
    method: str
    residual: float
    brackets: tuple = ()

    def __post_init__(self):
        z = tuple(float(v) for v in self.zeros)
        object.__setattr__(self, "zeros", z)
        object.__setattr__(self, "brackets", tuple((float(lo), float(hi)) for lo, hi in self.brackets))
        if len(z) != self.degree:
            raise NumericalBreakdownError(f"expected {self.degree} zeros, got {len(z)}")
        if any(b <= a for a, b in zip(z, z[1:])):
            raise NumericalBreakdownError("zeros are not strictly increasing")

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.zeros, dtype=dtype)

    def __len__(self):
        return self.degree

    def __getitem__(self, k):
        return self.zeros[k]

    def to_dict(self):
        d = asdict(self)
        d["zeros"] = list(self.zeros)
        d["brackets"] = [list(b) for b in self.brackets]
        return d

    @classmethod
    def from_dict(cls, d):
        return cls(d["degree"], tuple(d["zeros"]), d["method"], d["residual"], tuple(tuple(b) for b in d["brackets"]))


def _newton_residual(f, z):
    if len(z) == 0:
        return 0.0
    v, d = f(np.asarray(z))
    return float(np.max(np.abs(v) / (np.abs(d) * (1 + np.abs(z)))))


def tridiag_zeros(coeffs: RecurrenceCoeffs, n) -> ZeroSet:
    """Zeros of p_n as eigenvalues of the n x n Jacobi matrix."""
    if n == 0:
        return ZeroSet(0, (), "eigensolve", 0.0, ())
    d, e = coeffs.jacobi_matrix(n)
    if n == 1:
        z = d.copy()
    else:
        try:
            z = eigh_tridiagonal(d, e, eigvals_only=True)
        except np.linalg.LinAlgError as exc:
            raise NumericalBreakdownError(f"tridiagonal eigensolve failed: {exc}") from exc
    z = np.sort(z)
    # each zero is alone between the midpoints to its neighbours
    span = max(1.0, float(z[-1] - z[0]))
    mids = (z[1:] + z[:-1]) / 2
    lo = np.concatenate([[z[0] - span], mids])
    hi = np.concatenate([mids, [z[-1] + span]])
    ev = PolyEvaluator(coeffs)
    res = _newton_residual(lambda x: ev(n, x), z)
    return ZeroSet(n, tuple(z), "eigensolve", res, tuple(zip(lo, hi)))


def bracket_solve(f, lo, hi):
    """Safeguarded Newton on every bracket at once.

    A Newton step is taken when it lands inside the current bracket and at
    least halves the previous step, otherwise the bracket is bisected; the
    sign change is kept at every step. f maps an array of points to
    (values, derivatives). Returns (roots, ok) where ok marks brackets that
    showed a sign change.
    """
    lo = np.array(lo, dtype=float)
    hi = np.array(hi, dtype=float)
    flo = f(lo)[0]
    fhi = f(hi)[0]
    ok = np.sign(flo) * np.sign(fhi) <= 0
    root = np.where(flo == 0, lo, np.where(fhi == 0, hi, np.nan))
    done = ~np.isnan(root) | ~ok
    x = 0.5 * (lo + hi)
    last = hi - lo
    for _ in range(400):
        tol = BISECT_RTOL * (1 + np.maximum(np.abs(lo), np.abs(hi)))
        active = ~done & (hi - lo > tol)
        if not np.any(active):
            break
        v, d = f(x)
        hit = active & (v == 0)
        root = np.where(hit, x, root)
        done |= hit
        left = active & ~hit & (np.sign(v) == np.sign(flo))
        right = active & ~hit & ~left
        lo = np.where(left, x, lo)
        flo = np.where(left, v, flo)
        hi = np.where(right, x, hi)
        with np.errstate(divide="ignore", invalid="ignore"):
            xn = x - v / d
        newton = np.isfinite(xn) & (xn > lo) & (xn < hi) & (np.abs(xn - x) < 0.5 * last)
        step_to = np.where(newton, xn, 0.5 * (lo + hi))
        last = np.where(active, np.abs(step_to - x), last)
        # a converged Newton iterate ends the bracket search for that zero
        conv = active & np.isfinite(xn) & (np.abs(xn - x) <= tol)
        done |= conv
        x = np.where(conv, xn, np.where(active, step_to, x))
    exact = ~np.isnan(root)
    x = np.where(exact, root, x)
    polish = ok & ~exact
    for _ in range(MAX_NEWTON):
        v, d = f(x)
        with np.errstate(divide="ignore", invalid="ignore"):
            step = np.where(d != 0, v / d, 0.0)
        xn = x - step
        keep = polish & np.isfinite(xn) & (xn >= lo) & (xn <= hi)
        if not np.any(keep):
            break
        x = np.where(keep, xn, x)
    return x, ok


def _open(lo, hi):
    lo = np.asarray(lo, dtype=float)
    hi = np.asarray(hi, dtype=float)
    return lo - NUDGE * (1 + np.abs(lo)), hi + NUDGE * (1 + np.abs(hi))


def _dense_scan(f, left, right, n, points=4000):
    grid = np.linspace(left, right, points * max(n, 1) + 1)
    v = f(grid)[0]
    s = np.sign(v)
    idx = np.nonzero(s[:-1] * s[1:] < 0)[0]
    exact = grid[s == 0]
    lo = np.concatenate([grid[idx], exact])
    hi = np.concatenate([grid[idx + 1], exact])
    order = np.argsort(lo)
    return lo[order], hi[order]


def _solve_chain(f, lo, hi, n, scan_range, tag):
    lo, hi = _open(lo, hi)
    x, ok = bracket_solve(f, lo, hi)
    method = "bracketed-bisection"
    if not np.all(ok):
        lo, hi = _dense_scan(f, *scan_range, n)
        if lo.size != n:
            bad = int(np.argmin(ok))
            raise BracketFailureError(
                f"{tag}: no sign change in bracket {bad} and dense scan found {lo.size} of {n} zeros",
                index=bad,
            )
        x, ok = bracket_solve(f, lo, hi)
        method = "dense-scan"
    order = np.argsort(x)
    return ZeroSet(n, tuple(x[order]), method, _newton_residual(f, x), tuple(zip(lo[order], hi[order])))


def uvarov_zeros(spec: MeasureSpec, n, system: UvarovSystem | None = None) -> ZeroSet:
    """Zeros of the monic Uvarov polynomial p^N_n."""
    if n < 1:
        return ZeroSet(0, (), "bracketed-bisection", 0.0, ())
    sys = system or UvarovSystem(spec, n)
    a, N = spec.a, spec.mass
    side = spec.side
    x = np.asarray(tridiag_zeros(sys.base, n).zeros)

    def f(t):
        return sys.uvarov(t, n, 1)

    span = float(x[-1] - x[0]) + 1.0
    if side == "left":
        scan = (a, float(x[-1]) + span)
    else:
        scan = (float(x[0]) - span, a)
    if N == 0:
        # classical interlacing with p_{n-1}
        y = np.asarray(tridiag_zeros(sys.base, n - 1).zeros)
        lo = np.concatenate([[scan[0]], y])
        hi = np.concatenate([y, [scan[1]]])
    else:
        xs2 = np.asarray(tridiag_zeros(sys.star2, n - 1).zeros)
        if side == "left":
            lo = np.concatenate([[a], xs2])
            hi = x
        else:
            lo = x
            hi = np.concatenate([xs2, [a]])
    return _solve_chain(f, lo, hi, n, scan, f"uvarov_zeros(n={n}, N={N})")


def _shifted(coeffs: RecurrenceCoeffs, a):
    """Same family in the variable t = x - a."""
    return RecurrenceCoeffs(coeffs.beta - a, coeffs.gamma, coeffs.total_mass)


def local_offsets(spec: MeasureSpec, n, system: UvarovSystem | None = None, zeros: ZeroSet | None = None):
    """Offsets t_j = xN_j - a, resolved to full relative precision near a.

    A zero captured by the mass sits about 1/(N K_{n-1}(a,a)) from a, which
    doubles cannot resolve in absolute coordinates. Newton runs on
    p_n(a+t) + N B_n t p**_{n-1}(a+t) = k_n p^N_n(a+t) with the recurrences
    shifted by a, so t itself is the unknown.
    """
    sys = system or UvarovSystem(spec, n)
    zs = zeros or uvarov_zeros(spec, n, sys)
    a = spec.a
    t = np.asarray(zs.zeros, dtype=float) - a
    if n < 1:
        return t
    ev = PolyEvaluator(_shifted(sys.base, a))
    ev2 = PolyEvaluator(_shifted(sys.star2, a))
    NB = spec.mass * sys.B_of(n)

    def f(u):
        p, dp = ev(n, u, 1)
        q, dq = ev2(n - 1, u, 1)
        return p + NB * u * q, dp + NB * (q + u * dq)

    j = int(np.argmin(np.abs(t)))
    if NB > 0 and abs(t[j]) < 1e-6 * (1 + abs(a)):
        # first-order estimate of the captured zero
        t[j] = -ev(n, 0.0, 0)[0] / (NB * ev2(n - 1, 0.0, 0)[0])
    for _ in range(8):
        v, d = f(t)
        step = v / d
        ok = np.abs(step) < 0.5 * np.abs(t)  # never cross a
        t = np.where(ok, t - step, t)
        if np.all(np.abs(step) <= 4 * np.finfo(float).eps * np.abs(t)):
            break
    return t


def uvarov_zeros_discretized(spec: MeasureSpec, n, nodes=None) -> ZeroSet:
    """Independent route: Gauss rule of the base weight plus the point mass, Lanczos, eigensolve."""
    m = nodes or max(4 * n, 40)
    xq, wq = gauss_rule(spec.family, m)
    xs = np.append(xq, spec.a)
    ws = np.append(wq, spec.mass)
    if spec.mass == 0:
        xs, ws = xq, wq
    c = lanczos_recurrence(xs, ws, n)
    z = tridiag_zeros(c, n)
    return ZeroSet(n, z.zeros, "discretized-eigensolve", z.residual, z.brackets)


def christoffel_zeros(spec: MeasureSpec, n, level=1) -> ZeroSet:
    return tridiag_zeros(starred_recurrence(spec, max(n, 1), level), n)


# interlacing


@dataclass(frozen=True)
class ChainCheck:
    name: str
    labels: tuple
    values: tuple
    holds: bool
    min_margin: float
    offending: tuple | None = None
    equalities: tuple = ()


def check_chain(name, items, equal_pairs=(), eq_tol=1e-10):
    """items: sequence of (label, value) claimed strictly increasing."""
    labels = tuple(l for l, _ in items)
    values = tuple(float(v) for _, v in items)
    gaps = np.diff(values)
    offending = None
    holds = True
    if gaps.size and np.min(gaps) <= 0:
        holds = False
        k = int(np.argmin(gaps))
        offending = (labels[k], labels[k + 1])
    for la, va, lb, vb in equal_pairs:
        if abs(va - vb) > eq_tol * (1 + abs(va)):
            holds = False
            offending = offending or (la, lb)
    margin = float(np.min(gaps)) if gaps.size else math.inf
    return ChainCheck(name, labels, values, holds, margin, offending, tuple((la, lb) for la, _, lb, _ in equal_pairs))


def _merge(*seqs):
    return [item for group in zip(*seqs) for item in group]


def _boundary_chain(spec, n, xN):
    """Chains with the zeros of the parameter-shifted classical families."""
    fam = spec.family
    if not spec.is_boundary or n < 1:
        return None
    if fam.kind == "laguerre":
        name, shifted, p = "laguerre-endpoint", fam.shifted(d_alpha=2), "a+2"
    elif spec.side == "left":
        name, shifted, p = "jacobi-left-endpoint", fam.shifted(d_beta=2), "b+2"
    else:
        name, shifted, p = "jacobi-right-endpoint", fam.shifted(d_alpha=2), "a+2"
    x = tridiag_zeros(classical_recurrence(fam, n + 1), n).zeros
    y = tridiag_zeros(classical_recurrence(shifted, n + 1), n - 1).zeros
    XN = [(f"xN_{k + 1}", v) for k, v in enumerate(xN)]
    X = [(f"x_{k + 1}", v) for k, v in enumerate(x)]
    Y = [(f"y_{k + 1}[{p}]", v) for k, v in enumerate(y)]
    if spec.side == "left":
        items = [("a", spec.a)] + _merge(XN, X, Y + [None])[:-1]
    else:
        items = _merge(X, XN, Y + [None])[:-1] + [("a", spec.a)]
    return check_chain(name, [i for i in items if i is not None])


@dataclass(frozen=True)
class InterlacingReport:
    checks: tuple

    @property
    def holds(self):
        return all(c.holds for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.holds]


def uvarov_sign_check(spec: MeasureSpec, n, system: UvarovSystem | None = None) -> ChainCheck:
    """Sign certificate for the Uvarov chain, independent of how close the zeros sit.

    With zeta_k the zeros of p**_{n-1} and x_k those of p_n,
    k_n p^N_n(zeta_k) = p_n(zeta_k) and k_n p^N_n(x_k) = N B_n (x_k - a) p**_{n-1}(x_k),
    both free of cancellation. A strict sign change of p^N_n across each of the
    n intervals (zeta_{k-1}, x_k) (left side, zeta_0 = a) or (x_k, zeta_k)
    (right side, zeta_n = a) puts exactly one zero strictly inside each.
    """
    sys = system or UvarovSystem(spec, n)
    a, NB = spec.a, spec.mass * sys.B_of(n)
    x = np.asarray(tridiag_zeros(sys.base, n).zeros)
    zeta = np.asarray(tridiag_zeros(sys.star2, n - 1).zeros) if n > 1 else np.zeros(0)
    # values of k_n p^N_n, relative to the size of the terms
    pz = np.asarray(sys.classical(np.append(zeta, a), n, 0)[0], dtype=float)
    q = np.asarray(sys.star2_eval(x, n - 1, 0)[0], dtype=float)
    px = NB * (x - a) * q
    scale = max(np.max(np.abs(pz)), np.max(np.abs(px)), 1e-300)
    vz, va, vx = pz[:-1] / scale, pz[-1] / scale, px / scale
    if spec.side == "left":
        ends = np.concatenate([[va], vz])
        labels = [("a", "x_1")] + [(f"x**[n-1]_{k}", f"x_{k + 1}") for k in range(1, n)]
        left_v, right_v = ends, vx
        pos_ok = bool(np.all(np.concatenate([[a], zeta]) < x))
    else:
        ends = np.concatenate([vz, [va]])
        labels = [(f"x_{k}", f"x**[n-1]_{k}") for k in range(1, n)] + [(f"x_{n}", "a")]
        left_v, right_v = vx, ends
        pos_ok = bool(np.all(x < np.concatenate([zeta, [a]])))
    prod = left_v * right_v
    margin = float(np.min(np.minimum(np.abs(left_v), np.abs(right_v))))
    holds = bool(pos_ok and np.all(prod < 0))
    bad = None if holds else labels[int(np.argmax(prod >= 0))]
    return ChainCheck("uvarov-signs", tuple(f"({u},{v})" for u, v in labels), tuple(prod), holds, margin, bad)


def interlacing_report(spec: MeasureSpec, n, system=None) -> InterlacingReport:
    """Verdicts for every interlacing chain that applies to (spec, n)."""
    sys = system or UvarovSystem(spec, n + 1)
    a = spec.a
    x = tridiag_zeros(sys.base, n).zeros
    x1 = tridiag_zeros(sys.base, n + 1).zeros
    xs = tridiag_zeros(sys.star, n).zeros
    xss = tridiag_zeros(sys.star2, n).zeros
    xss1 = tridiag_zeros(sys.star2, n - 1).zeros if n >= 1 else ()
    X1 = [(f"x[n+1]_{k + 1}", v) for k, v in enumerate(x1)]
    X = [(f"x_{k + 1}", v) for k, v in enumerate(x)]
    XS = [(f"x*_{k + 1}", v) for k, v in enumerate(xs)]
    XSS = [(f"x**_{k + 1}", v) for k, v in enumerate(xss)]
    checks = [check_chain("classical", _merge(X1, X + [None])[:-1])]
    if spec.side == "left":
        kern = _merge(X1[:-1], X, XS) + [X1[-1]]
    else:
        kern = _merge(X1[:-1], XS, X) + [X1[-1]]
    checks.append(check_chain("kernel", kern))
    checks.append(check_chain("iterated-kernel", _merge(X1[:-1], XSS) + [X1[-1]]))
    if spec.mass > 0 and n >= 1:
        xN = uvarov_zeros(spec, n, sys).zeros
        XN = [(f"xN_{k + 1}", v) for k, v in enumerate(xN)]
        S = [(f"x**[n-1]_{k + 1}", v) for k, v in enumerate(xss1)]
        if spec.side == "left":
            items = [("a", a)] + [i for i in _merge(XN, X, S + [None]) if i is not None]
        else:
            items = [i for i in _merge(X, XN, S + [None]) if i is not None] + [("a", a)]
        checks.append(check_chain("uvarov", items))
        checks.append(uvarov_sign_check(spec, n, sys))
        b = _boundary_chain(spec, n, xN)
        if b is not None:
            checks.append(b)
    return InterlacingReport(tuple(checks))


# monotonicity in N


@dataclass(frozen=True)
class MassScanResult:
    degree: int
    side: str
    masses: tuple
    zero_sets: tuple
    verdicts: tuple  # per zero: 'pass' | 'fail' | 'indeterminate'
    min_margins: tuple
    limits: tuple
    rates: tuple  # rates[j][k] = N_j * |x_k(N_j) - limit_k|

    @property
    def trajectories(self):
        return np.array([z.zeros for z in self.zero_sets]).T

    @property
    def monotone(self):
        return all(v == "pass" for v in self.verdicts)

    def to_dict(self):
        return {
            "degree": self.degree,
            "side": self.side,
            "masses": list(self.masses),
            "zero_sets": [z.to_dict() for z in self.zero_sets],
            "verdicts": list(self.verdicts),
            "min_margins": list(self.min_margins),
            "limits": list(self.limits),
            "rates": [list(r) for r in self.rates],
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            d["degree"],
            d["side"],
            tuple(d["masses"]),
            tuple(ZeroSet.from_dict(z) for z in d["zero_sets"]),
            tuple(d["verdicts"]),
            tuple(d["min_margins"]),
            tuple(d["limits"]),
            tuple(tuple(r) for r in d["rates"]),
        )


def monotone_verdict(traj, direction, slack=MONOTONE_SLACK):
    """'pass' if every step moves strictly in `direction` (+1/-1) by more than slack."""
    steps = direction * np.diff(traj)
    if steps.size == 0:
        return "pass", math.inf
    margin = float(np.min(steps))
    if np.any(steps < -slack):
        return "fail", margin
    if np.any(steps <= slack):
        return "indeterminate", margin
    return "pass", margin


def limit_points(spec: MeasureSpec, n, system=None):
    """Limits of the Uvarov zeros as N -> infinity, in zero order."""
    sys = system or UvarovSystem(spec, n)
    z = list(tridiag_zeros(sys.star2, n - 1).zeros)
    return tuple([spec.a] + z) if spec.side == "left" else tuple(z + [spec.a])


def mass_scan(spec: MeasureSpec, n, masses) -> MassScanResult:
    masses = [float(m) for m in masses]
    if not masses:
        raise DomainError("mass grid is empty")
    if any(m < 0 for m in masses) or any(b <= a for a, b in zip(masses, masses[1:])):
        raise DomainError("mass grid must be nonnegative and strictly increasing")
    sys = UvarovSystem(spec, n)
    sets = grid_map(lambda N: uvarov_zeros(spec.with_mass(N), n), masses)
    traj = np.array([s.zeros for s in sets]).T
    direction = -1 if spec.side == "left" else 1
    verdicts, margins = zip(*(monotone_verdict(t, direction) for t in traj))
    limits = limit_points(spec, n, sys)
    rates = tuple(tuple(N * abs(x - l) for x, l in zip(s.zeros, limits)) for N, s in zip(masses, sets))
    return MassScanResult(n, spec.side, tuple(masses), tuple(sets), verdicts, margins, limits, rates)


# limits and rates


def convergence_rate(spec: MeasureSpec, n, k, system=None):
    """(limit, rate) of one zero as N -> infinity, with rate = lim N |x^N - limit|.

    k = 0 is the zero captured by the mass point (limit a); k >= 1 is the
    zero converging to the k-th zero of p**_{n-1}.
    """
    sys = system or UvarovSystem(spec, n)
    a = spec.a
    B = sys.B_of(n)
    sign = -1.0 if spec.side == "left" else 1.0
    if k == 0:
        pn = sys.classical(a, n, 0)[0]
        q = sys.star2_eval(a, n - 1, 0)[0]
        return a, sign * pn / (B * q)
    z = tridiag_zeros(sys.star2, n - 1).zeros
    if not 1 <= k <= n - 1:
        raise DomainError(f"interior zero index must be in 1..{n - 1}")
    zeta = z[k - 1]
    pn = sys.classical(zeta, n, 0)[0]
    dq = sys.star2_eval(zeta, n - 1, 1)[1]
    return zeta, sign * pn / (B * (zeta - a) * dq)


def laguerre_rate(alpha, n):
    """g_n(alpha) = Gamma(n) Gamma(alpha+2) Gamma(alpha+3) / Gamma(n+alpha+2)."""
    return gamma_ratio([n, alpha + 2, alpha + 3], [n + alpha + 2])


def jacobi_left_rate(alpha, beta, n):
    """h_n(alpha, beta), the captured-zero rate for a mass at -1."""
    return gamma_ratio(
        [n, beta + 2, beta + 3, n + alpha], [n + beta + 2, n + alpha + beta + 2], log2_factor=alpha + beta + 2
    )


def jacobi_right_rate(alpha, beta, n):
    """g_n(alpha, beta), the captured-zero rate for a mass at +1."""
    return gamma_ratio(
        [n, alpha + 2, alpha + 3, n + beta], [n + alpha + 2, n + alpha + beta + 2], log2_factor=alpha + beta + 2
    )


def closed_form_rate(spec: MeasureSpec, n, k):
    """Gamma-function rate for masses at a support endpoint, None elsewhere."""
    if not spec.is_boundary:
        return None
    fam = spec.family
    al, be = fam.alpha, fam.beta
    if fam.kind == "laguerre":
        g = laguerre_rate(al, n)
        return g if k == 0 else g / (al + 2)
    if spec.side == "left":
        h = jacobi_left_rate(al, be, n)
        if k == 0:
            return h
        zeta = tridiag_zeros(classical_recurrence(fam.shifted(d_beta=2), n), n - 1).zeros[k - 1]
        return (1 - zeta) * h / (2 * (be + 2))
    g = jacobi_right_rate(al, be, n)
    if k == 0:
        return g
    zeta = tridiag_zeros(classical_recurrence(fam.shifted(d_alpha=2), n), n - 1).zeros[k - 1]
    return (1 + zeta) * g / (2 * (al + 2))


# minimum mass


def _check_exterior(spec, endpoint):
    if spec.is_boundary:
        raise DomainError("minimum mass needs a strictly outside the support hull")
    e = spec.endpoint
    if endpoint is not None and not math.isclose(float(endpoint), e):
        raise DomainError(f"endpoint {endpoint} is not on the side of a={spec.a} (expected {e})")
    return e


def min_mass(spec: MeasureSpec, n, endpoint=None, system=None):
    """N_0 beyond which the extreme zero leaves the support hull.

    N_0 = -p_n(e) / (K_{n-1}(a,a) (e - a) p**_{n-1}(e)), e the endpoint next to a.
    """
    e = _check_exterior(spec, endpoint)
    sys = system or UvarovSystem(spec, n)
    pn = sys.classical(e, n, 0)[0]
    q = sys.star2_eval(e, n - 1, 0)[0]
    return -pn / (sys.B_of(n) * (e - spec.a) * q)


def min_mass_by_bisection(spec: MeasureSpec, n, endpoint=None, rtol=1e-14):
    """Solve p^N_n(e) = 0 for N by bisection in log N."""
    e = _check_exterior(spec, endpoint)
    sys = UvarovSystem(spec, n)

    def g(N):
        return sys.uvarov(e, n, 0, mass=N)[0]

    lo, hi = 1e-300, 1.0
    g0 = g(0.0)
    while np.sign(g(hi)) == np.sign(g0):
        hi *= 10
        if hi > 1e300:
            raise BracketFailureError("p^N_n(endpoint) keeps its sign for all N")
    lo = hi / 10 if hi > 1 else lo
    while np.sign(g(lo)) != np.sign(g0):
        lo /= 10
    for _ in range(300):
        mid = math.sqrt(lo * hi)
        if hi - lo <= rtol * hi:
            break
        if np.sign(g(mid)) == np.sign(g0):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class Straddle:
    N0: float
    endpoint: float
    side: str
    below: float  # extreme zero at N0 (1 - delta)
    at: float
    above: float  # extreme zero at N0 (1 + delta)

    @property
    def confirmed(self):
        e = self.endpoint
        if self.side == "left":
            return self.below > e > self.above
        return self.below < e < self.above


def straddle(spec: MeasureSpec, n, delta=1e-3):
    """Extreme zero at N_0 (1 -+ delta): inside the hull below N_0, outside above."""
    N0 = min_mass(spec, n)
    k = 0 if spec.side == "left" else n - 1
    vals = [uvarov_zeros(spec.with_mass(N0 * f), n).zeros[k] for f in (1 - delta, 1.0, 1 + delta)]
    return Straddle(N0, spec.endpoint, spec.side, *vals)


# Hermite-type polynomials by symmetrization


def hermite_type_zeros(N, n) -> ZeroSet:
    """Zeros of the degree-n monic polynomial orthogonal for e^{-x^2} dx + N delta_0."""
    if n < 1:
        raise DomainError("degree must be at least 1")
    m = n // 2
    if n % 2 == 0:
        t = uvarov_zeros(MeasureSpec(ClassicalFamily.laguerre(-0.5), 0.0, N), m)
        pos = np.sqrt(np.asarray(t.zeros))
        br = [(math.sqrt(max(lo, 0.0)), math.sqrt(hi)) for lo, hi in t.brackets]
        z = np.concatenate([-pos[::-1], pos])
        brackets = [(-hi, -lo) for lo, hi in br[::-1]] + br
    else:
        if m:
            t = tridiag_zeros(classical_recurrence(ClassicalFamily.laguerre(0.5), m + 1), m)
            pos = np.sqrt(np.asarray(t.zeros))
        else:
            pos = np.zeros(0)
        h = pos[0] / 2 if m else 1.0
        z = np.concatenate([-pos[::-1], [0.0], pos])
        mids = (z[1:] + z[:-1]) / 2
        brackets = list(zip(np.concatenate([[z[0] - 1], mids]), np.concatenate([mids, [z[-1] + 1]])))
        brackets[m] = (-h, h)
    herm = classical_recurrence(ClassicalFamily.hermite(), n + 1)
    # for even degrees the residual is measured on the Laguerre-type factor
    if n % 2 == 0:
        res = t.residual
    else:
        res = _newton_residual(lambda x: PolyEvaluator(herm)(n, x), z)
    return ZeroSet(n, tuple(z), "symmetrized", res, tuple(brackets))


def hermite_type_zeros_discretized(N, n, nodes=None) -> ZeroSet:
    """Independent route through a Gauss-Hermite rule plus the mass at 0."""
    m = nodes or max(4 * n, 40)
    xq, wq = gauss_rule(ClassicalFamily.hermite(), m)
    if N > 0:
        xq, wq = np.append(xq, 0.0), np.append(wq, N)
    z = tridiag_zeros(lanczos_recurrence(xq, wq, n), n)
    return ZeroSet(n, z.zeros, "discretized-eigensolve", z.residual, z.brackets)


def hermite_chain_report(N, n) -> InterlacingReport:
    """Chains for the squared positive zeros of degrees 2n and 2n+1."""
    lm = lambda al, k: tridiag_zeros(classical_recurrence(ClassicalFamily.laguerre(al), k + 1), k).zeros
    ev = hermite_type_zeros(N, 2 * n).zeros
    sq = np.sort(np.asarray(ev[n:]) ** 2)
    T = [(f"h2n_{k + 1}^2", v) for k, v in enumerate(sq)]
    X = [(f"x_{k + 1}[-1/2]", v) for k, v in enumerate(lm(-0.5, n))]
    Y = [(f"x[n-1]_{k + 1}[3/2]", v) for k, v in enumerate(lm(1.5, n - 1))]
    even = check_chain("hermite-even", [("0", 0.0)] + [i for i in _merge(T, X, Y + [None]) if i is not None])
    od = hermite_type_zeros(N, 2 * n + 1).zeros
    sq = np.sort(np.asarray(od[n + 1 :]) ** 2)
    X = lm(0.5, n)
    Y = [(f"x[n-1]_{k + 1}[5/2]", v) for k, v in enumerate(lm(2.5, n - 1))]
    S = [(f"h2n+1_{k + 1}^2", v) for k, v in enumerate(sq)]
    eqs = tuple((f"h2n+1_{k + 1}^2", s, f"x_{k + 1}[1/2]", x) for k, (s, x) in enumerate(zip(sq, X)))
    odd = check_chain("hermite-odd", [("0", 0.0)] + [i for i in _merge(S, Y + [None]) if i is not None], eqs)
    return InterlacingReport((even, odd))
