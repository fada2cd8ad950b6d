"""Command-line front end.

    opoly table     --family jacobi --alpha 0 --beta 0 --n 3 --a 1 --masses 0,1,10,100,1000
    opoly zeros     --family laguerre --alpha 2 --n 3 --a 0 --mass 10
    opoly scan      --family laguerre --alpha 2 --n 3 --a 0 --masses 1,10,100
    opoly min-mass  --family laguerre --alpha 2 --n 3 --a -1
    opoly residual  --family jacobi --alpha 0 --beta 0 --n 4 --a -1 --mass 3
    opoly verify    [--suite electrostatics] [--perturb-b 1e-3]
    opoly plot-data --family jacobi --alpha 0 --beta 0 --n 3 --a 1 --eps 0,1,10 --x-min -1 --x-max 1

Exit codes: 0 success, 1 verification or numerical failure, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

import numpy as np

from .core import ClassicalFamily
from .electrostatics import ElectroSystem, case_of, equilibrium_residual
from .errors import DomainError, InvalidMeasureError, OpolyError
from .transforms import MeasureSpec, UvarovSystem
from .verify import SUITES, run_suites
from .zeros import (
    christoffel_zeros,
    hermite_type_zeros,
    mass_scan,
    min_mass,
    min_mass_by_bisection,
    straddle,
    uvarov_zeros,
)

SCHEMA_VERSION = 1
DEFAULT_GRID = (0.0, 1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3, 1e4)


class UsageError(Exception):
    pass


def _float_list(text):
    if text is None:
        return None
    parts = [p for p in text.split(",") if p.strip()]
    if not parts:
        raise UsageError("mass grid is empty")
    try:
        return [float(p) for p in parts]
    except ValueError as e:
        raise UsageError(f"bad number list {text!r}") from e


@dataclass(frozen=True)
class RunConfig:
    command: str
    family: str = "jacobi"
    alpha: float = 0.0
    beta: float = 0.0
    n: int = 3
    a: float | None = None
    mass: float = 0.0
    masses: tuple | None = None
    level: int = 0
    fmt: str = "csv"
    out: str | None = None
    precision: str = "6"
    options: dict = field(default_factory=dict)

    def build_family(self):
        if self.family == "jacobi":
            return ClassicalFamily.jacobi(self.alpha, self.beta)
        if self.family == "laguerre":
            return ClassicalFamily.laguerre(self.alpha)
        if self.family == "hermite":
            return ClassicalFamily.hermite()
        raise UsageError(f"unknown family {self.family!r}")

    def spec(self, mass=None):
        if self.a is None:
            raise UsageError("--a is required for this command")
        return MeasureSpec(self.build_family(), self.a, self.mass if mass is None else mass, self.level)

    def validate(self):
        if self.n < 1:
            raise UsageError("--n must be at least 1")
        if self.fmt not in ("csv", "json"):
            raise UsageError("--format must be csv or json")
        if self.precision not in ("6", "full"):
            raise UsageError("--precision must be 6 or full")
        if self.masses is not None and len(self.masses) == 0:
            raise UsageError("mass grid is empty")
        self.build_family()
        return self


def _num(v, precision):
    if isinstance(v, (bool, str)) or v is None:
        return v
    v = float(v)
    return float(f"{v:.6g}") if precision == "6" else v


def _fmt(v, precision):
    if isinstance(v, str):
        return v
    v = float(v)
    return f"{v:.6g}" if precision == "6" else repr(v)


def _round_tree(obj, precision):
    if isinstance(obj, dict):
        return {k: _round_tree(v, precision) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_tree(v, precision) for v in obj]
    if isinstance(obj, (float, np.floating)):
        return _num(obj, precision)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def emit(cfg: RunConfig, kind, header, rows, payload):
    """Write rows as CSV or payload as JSON; returns the text."""
    if cfg.fmt == "json":
        doc = {"schema_version": SCHEMA_VERSION, "kind": kind, "data": _round_tree(payload, cfg.precision)}
        text = json.dumps(doc, indent=2) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([_fmt(v, cfg.precision) for v in r])
        text = buf.getvalue()
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return text


# commands


def cmd_table(cfg: RunConfig):
    if cfg.family not in ("jacobi", "laguerre"):
        raise UsageError("table needs --family jacobi or laguerre")
    masses = sorted(cfg.masses or (0.0, 1.0, 10.0, 100.0, 1000.0))
    sets = [uvarov_zeros(cfg.spec(N), cfg.n) for N in masses]
    header = ["N"] + [f"x{k + 1}" for k in range(cfg.n)]
    rows = [[N, *z.zeros] for N, z in zip(masses, sets)]
    payload = {"family": cfg.build_family().label(), "n": cfg.n, "a": cfg.a,
               "rows": [{"N": N, "zeros": list(z.zeros)} for N, z in zip(masses, sets)]}
    emit(cfg, "table", header, rows, payload)
    return 0


def cmd_zeros(cfg: RunConfig):
    if cfg.family == "hermite":
        zs = hermite_type_zeros(cfg.mass, cfg.n)
    elif cfg.level:
        zs = christoffel_zeros(cfg.spec(), cfg.n, cfg.level)
    else:
        zs = uvarov_zeros(cfg.spec(), cfg.n)
    rows = [[k + 1, x] for k, x in enumerate(zs.zeros)]
    emit(cfg, "zeros", ["k", "x"], rows, zs.to_dict())
    return 0


def cmd_scan(cfg: RunConfig):
    grid = list(cfg.masses) if cfg.masses is not None else list(DEFAULT_GRID)
    res = mass_scan(cfg.spec(0.0), cfg.n, grid)
    header = ["N"] + [f"x{k + 1}" for k in range(cfg.n)] + [f"rate{k + 1}" for k in range(cfg.n)]
    rows = [[N, *z.zeros, *r] for N, z, r in zip(res.masses, res.zero_sets, res.rates)]
    rows.append(["verdict", *res.verdicts, *([""] * cfg.n)])
    rows.append(["limit", *res.limits, *([""] * cfg.n)])
    emit(cfg, "scan", header, rows, res.to_dict())
    return 0 if res.monotone or "fail" not in res.verdicts else 1


def cmd_min_mass(cfg: RunConfig):
    spec = cfg.spec(0.0)
    if spec.is_boundary:
        raise DomainError("min-mass needs a strictly outside the support")
    N0 = min_mass(spec, cfg.n)
    Nb = min_mass_by_bisection(spec, cfg.n)
    st = straddle(spec, cfg.n)
    payload = {"N0": N0, "N0_bisection": Nb, "endpoint": st.endpoint, "side": st.side,
               "extreme_zero": {"below": st.below, "at": st.at, "above": st.above}, "straddle": st.confirmed}
    rows = [["N0", N0], ["N0_bisection", Nb], ["endpoint", st.endpoint],
            ["zero_at_N0(1-1e-3)", st.below], ["zero_at_N0", st.at], ["zero_at_N0(1+1e-3)", st.above],
            ["straddle", "yes" if st.confirmed else "no"]]
    emit(cfg, "min-mass", ["quantity", "value"], rows, payload)
    return 0 if st.confirmed else 1


def cmd_residual(cfg: RunConfig):
    spec = cfg.spec()
    rep = equilibrium_residual(spec, cfg.n, samples=cfg.options.get("samples", 10))
    es = ElectroSystem.from_spec(spec, cfg.n)
    q = es.q_polynomial()
    payload = {"case": case_of(spec), "report": rep.to_dict(), "Q": list(q.poly.coef),
               "Q_roots": list(q.roots), "Q_closed_form_gap": q.consistency()}
    rows = [[k + 1, z, r] for k, (z, r) in enumerate(zip(rep.zeros, rep.residuals))]
    emit(cfg, "residual", ["k", "x", "residual"], rows, payload)
    return 0 if rep.max_residual < 1e-6 else 1


def cmd_verify(cfg: RunConfig):
    names = [cfg.options["suite"]] if cfg.options.get("suite") else None
    results = run_suites(names, perturb_b=cfg.options.get("perturb_b", 0.0))
    rows = [[r.suite, r.name, "pass" if r.passed else "fail", r.worst, r.bound] for r in results]
    emit(cfg, "verify", ["suite", "check", "status", "worst", "bound"], rows, [r.to_dict() for r in results])
    return 0 if all(r.passed for r in results) else 1


def cmd_plot_data(cfg: RunConfig):
    o = cfg.options
    lo, hi, count = o["x_min"], o["x_max"], o["samples"]
    if not hi > lo:
        raise UsageError("empty x-range")
    if count < 2:
        raise UsageError("--samples must be at least 2")
    eps = list(cfg.masses) if cfg.masses is not None else [0.0, 1.0, 10.0]
    xs = np.linspace(lo, hi, count)
    spec = cfg.spec()
    sys_ = UvarovSystem(spec, cfg.n)
    cols = [np.asarray(sys_.uvarov(xs, cfg.n, 0, mass=spec.mass + e)[0]) for e in eps]
    header = ["x"] + [f"N={spec.mass + e:g}" for e in eps]
    rows = [[x, *(c[i] for c in cols)] for i, x in enumerate(xs)]
    payload = {"x": list(xs), "curves": [{"N": spec.mass + e, "values": list(c)} for e, c in zip(eps, cols)]}
    emit(cfg, "plot-data", header, rows, payload)
    return 0


COMMANDS = {
    "table": cmd_table,
    "zeros": cmd_zeros,
    "scan": cmd_scan,
    "min-mass": cmd_min_mass,
    "residual": cmd_residual,
    "verify": cmd_verify,
    "plot-data": cmd_plot_data,
}


def build_parser():
    p = argparse.ArgumentParser(prog="opoly", description="Perturbed classical orthogonal polynomials and their zeros.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--family", choices=("jacobi", "laguerre", "hermite"), default="jacobi")
        s.add_argument("--alpha", type=float, default=0.0)
        s.add_argument("--beta", type=float, default=0.0)
        s.add_argument("--n", type=int, default=3)
        s.add_argument("--a", type=float, default=None)
        s.add_argument("--mass", type=float, default=0.0)
        s.add_argument("--masses", type=str, default=None, help="comma-separated list")
        s.add_argument("--level", type=int, choices=(0, 1, 2), default=0, help="Christoffel level for zeros")
        s.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
        s.add_argument("--out", default=None)
        s.add_argument("--precision", choices=("6", "full"), default="6")
        if name == "verify":
            s.add_argument("--suite", choices=SUITES, default=None)
            s.add_argument("--perturb-b", type=float, default=0.0, help="add a constant to B(x,n) (negative control)")
        if name == "plot-data":
            s.add_argument("--x-min", type=float, default=-1.0)
            s.add_argument("--x-max", type=float, default=1.0)
            s.add_argument("--samples", type=int, default=201)
            s.add_argument("--eps", type=str, default=None, help="mass increments added to --mass")
        if name == "residual":
            s.add_argument("--samples", type=int, default=10, help="perturbed configurations for the energy check")
    return p


def config_from_args(ns) -> RunConfig:
    opts = {}
    for key in ("suite", "perturb_b", "x_min", "x_max", "samples"):
        if hasattr(ns, key):
            opts[key] = getattr(ns, key)
    masses = _float_list(ns.eps) if getattr(ns, "eps", None) is not None else _float_list(ns.masses)
    if ns.masses is not None and not ns.masses.strip():
        raise UsageError("mass grid is empty")
    return RunConfig(ns.command, ns.family, ns.alpha, ns.beta, ns.n, ns.a, ns.mass,
                     tuple(masses) if masses is not None else None, ns.level, ns.fmt, ns.out,
                     ns.precision, opts).validate()


def main(argv=None):
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
        return COMMANDS[cfg.command](cfg)
    except (UsageError, DomainError, InvalidMeasureError) as e:
        print(f"opoly: error: {e}", file=sys.stderr)
        return 2
    except OpolyError as e:
        print(f"opoly: numerical failure: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
