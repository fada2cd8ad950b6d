"""Electrostatic picture for one setting: Q, its zero, the equilibrium residuals
at the zeros of p^N_n, and the energy against jittered configurations."""
import argparse
import json

from opoly import ClassicalFamily, MeasureSpec
from opoly.electrostatics import ElectroSystem, equilibrium_residual


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", choices=("jacobi", "laguerre"), default="jacobi")
    ap.add_argument("--alpha", type=float, default=0.5)
    ap.add_argument("--beta", type=float, default=0.5)
    ap.add_argument("--a", type=float, default=-1.0)
    ap.add_argument("--mass", type=float, default=1.0)
    ap.add_argument("--n", type=int, default=6)
    args = ap.parse_args(argv)
    fam = ClassicalFamily.laguerre(args.alpha) if args.family == "laguerre" else ClassicalFamily.jacobi(args.alpha, args.beta)
    spec = MeasureSpec(fam, args.a, args.mass)
    es = ElectroSystem.from_spec(spec, args.n)
    q = es.q_polynomial()
    rep = equilibrium_residual(spec, args.n)
    out = {
        "case": es.case,
        "c_n": es.c,
        "Q": list(q.poly.coef),
        "Q_real_roots": list(q.roots),
        "Q_complex_roots": [[z.real, z.imag] for z in q.complex_roots],
        "equilibrium": rep.to_dict(),
    }
    print(json.dumps(out, indent=2))


if __name__ == "__main__":
    main()
