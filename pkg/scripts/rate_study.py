"""N |x_k(N) - limit_k| against the closed-form rates as N doubles."""
import argparse

from opoly import ClassicalFamily, MeasureSpec, closed_form_rate, limit_points, uvarov_zeros


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--family", choices=("jacobi", "laguerre"), default="laguerre")
    ap.add_argument("--alpha", type=float, default=2.0)
    ap.add_argument("--beta", type=float, default=0.0)
    ap.add_argument("--a", type=float, default=0.0)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--doublings", type=int, default=12)
    args = ap.parse_args(argv)
    fam = ClassicalFamily.laguerre(args.alpha) if args.family == "laguerre" else ClassicalFamily.jacobi(args.alpha, args.beta)
    spec = MeasureSpec(fam, args.a)
    lims = limit_points(spec, args.n)
    rates = [closed_form_rate(spec, args.n, k) for k in range(args.n)]
    print("N," + ",".join(f"rate{k + 1}" for k in range(args.n)))
    N = 10.0
    for _ in range(args.doublings):
        z = uvarov_zeros(spec.with_mass(N), args.n).zeros
        print(f"{N:g}," + ",".join(f"{N * abs(x - l):.10g}" for x, l in zip(z, lims)))
        N *= 2
    print("limit," + ",".join(f"{r:.10g}" for r in rates))


if __name__ == "__main__":
    main()
