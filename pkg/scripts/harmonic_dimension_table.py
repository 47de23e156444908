#!/usr/bin/env python3
"""Print symmetric-power dimensions, their isotypic decompositions, and
the harmonic dimensions, cross-checked against the contraction kernel.

Usage: python scripts/harmonic_dimension_table.py [--max-dim M] [--max-deg I]
"""

import argparse

from hodgekit.exactmath import Matrix, rank
from hodgekit.qforms import QuadraticSpace
from hodgekit.symalg import (contraction_matrix, harm_dim, sym_decompose_dims,
                             sym_dim)


def table(max_dim, max_deg):
    for m in range(3, max_dim + 1):
        space = QuadraticSpace(Matrix.identity(m))
        print(f"dim V = {m}")
        for i in range(max_deg + 1):
            s = sym_dim(m, i)
            h = harm_dim(m, i)
            parts = sym_decompose_dims(m, i)
            if i >= 2:
                kern = s - rank(contraction_matrix(space, i))
                mark = "ok" if kern == h else "MISMATCH"
            else:
                mark = "ok"
            print(f"  Sym^{i}: dim {s:4d} = {' + '.join(map(str, parts)):24s}"
                  f" harmonic {h:4d} [{mark}]")
    print()


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-dim", type=int, default=6)
    ap.add_argument("--max-deg", type=int, default=6)
    args = ap.parse_args()
    table(args.max_dim, args.max_deg)
