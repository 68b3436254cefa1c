#!/usr/bin/env python3
"""Census of Schubert cells against the exterior-algebra Poincare data.

For each matrix class and a range of ambient bounds, print the cells per
degree, the independently expanded Poincare polynomial and the verdict;
also tabulate the characteristic-zero symmetric-fiber polynomials and the
rectangular-complement polynomials.
"""
import argparse

from schubert import cohom


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=8)
    args = ap.parse_args()

    for klass, ring in (("general", "Z"), ("symmetric", "Z2"), ("skew", "Z")):
        print(f"== class {klass} (ring {ring})")
        for n in range(2, args.max_n + 1):
            table = cohom.betti_table(n, klass, ring)
            poly = cohom.poincare_polynomial(n, klass)
            verdict = "EQUAL" if table == poly else "UNEQUAL"
            cells = len(cohom.enumerate_symbols(n, klass))
            top = max(table)
            print(f"  n={n:2d}  cells={cells:4d}  top degree={top:3d}  {verdict}")
        print()

    print("== symmetric fiber, characteristic-zero coefficients")
    for m in range(2, args.max_n + 1):
        print(f"  m={m:2d}  {cohom.poly_str(cohom.sym_char0_poincare(m))}")
    print()

    print("== complements of singular rectangular matrices")
    for m in range(2, args.max_n + 1):
        for n in range(1, m):
            print(f"  ({m},{n})  {cohom.poly_str(cohom.stiefel_poincare(m, n))}")


if __name__ == "__main__":
    main()
