#!/usr/bin/env python3
"""Randomized sweep of the top-power map on harmonic quotients.

For each space dimension and top degree, drive many random vectors
(plus a constructed isotropic one on indefinite forms) through
power_top and count the survivors; the nondegeneracy theorem predicts
no zero ever appears, and power_top raises InternalError if one does.

Usage: python scripts/nondegeneracy_sweep.py [--trials N] [--seed S]
       [--max-dim M] [--max-top K]
"""

import argparse
import random
import time
from fractions import Fraction

from hodgekit.exactmath import Matrix
from hodgekit.qforms import QuadraticSpace
from hodgekit.symalg import HARMONIC, SymAlgebra, power_top

F = Fraction


def sweep(trials, seed, max_dim, max_top):
    rng = random.Random(seed)
    total = 0
    start = time.time()
    for m in range(3, max_dim + 1):
        grams = {"euclidean": Matrix.identity(m)}
        indef = [[F(0)] * m for _ in range(m)]
        for a in range(m):
            indef[a][a] = F(1) if a < 2 else F(-1)
        grams["signature (2, %d)" % (m - 2)] = Matrix(indef)
        for name, gram in grams.items():
            space = QuadraticSpace(gram)
            for n in range(2, max_top + 1):
                alg = SymAlgebra(space, HARMONIC, n)
                vectors = []
                for _ in range(trials):
                    v = tuple(F(rng.randint(-99, 99)) for _ in range(m))
                    if any(c != 0 for c in v):
                        vectors.append(v)
                if name != "euclidean":
                    iso = [F(0)] * m
                    iso[0], iso[m - 1] = F(1), F(1)
                    vectors.append(tuple(iso))
                for v in vectors:
                    assert not power_top(alg, v).is_zero()
                total += len(vectors)
                print(f"m={m} {name:>18} n={n}: {len(vectors)} nonzero powers")
    print(f"{total} trials, no vanishing top power ({time.time() - start:.1f}s)")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-dim", type=int, default=5)
    ap.add_argument("--max-top", type=int, default=3)
    args = ap.parse_args()
    sweep(args.trials, args.seed, args.max_dim, args.max_top)
