"""Zeros of the degree-3 Uvarov polynomials for the Legendre weight with a mass at 1
and the Laguerre(2) weight with a mass at 0, for N in {0, 1, 10, 100, 1000}."""
import argparse
import csv
import sys

from opoly import ClassicalFamily, MeasureSpec, uvarov_zeros

MASSES = (0, 1, 10, 100, 1000)
SETTINGS = {
    "legendre-at-1": MeasureSpec(ClassicalFamily.jacobi(0, 0), 1.0),
    "laguerre2-at-0": MeasureSpec(ClassicalFamily.laguerre(2), 0.0),
}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    args = ap.parse_args(argv)
    w = csv.writer(sys.stdout)
    w.writerow(["setting", "N"] + [f"x{k + 1}" for k in range(args.n)])
    for name, spec in SETTINGS.items():
        for N in MASSES:
            z = uvarov_zeros(spec.with_mass(N), args.n).zeros
            w.writerow([name, N] + [f"{v:.6g}" for v in z])


if __name__ == "__main__":
    main()
