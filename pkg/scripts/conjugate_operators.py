#!/usr/bin/env python3
"""Conjugate arbitrary degree-decreasing operators onto the plain shift.

Solves for the graded matrix A with first column (1, 0, ...) such that
A S A^{-1} = M for a few interesting M, and re-verifies by multiplication.

Usage: python scripts/conjugate_operators.py [--order N] [--seed S]
"""

import argparse
import random

from riordanlab import (
    Field,
    Weight,
    finite_difference_matrix,
    m_matrix,
    matrix_to_polys,
    solve_conjugator,
)
from riordanlab.sampling import degree_decreasing_matrix


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--order", type=int, default=8)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    field = Field()
    shift = m_matrix(Weight.geometric(field, args.order, 1))
    rng = random.Random(args.seed)
    targets = {
        "usual derivative": m_matrix(Weight.exponential(field, args.order, 1)),
        "finite difference": finite_difference_matrix(
            Weight.exponential(field, args.order, 1), 1
        ),
        "q-derivative (q=2)": m_matrix(Weight.q_factorial(field, args.order, -1, 2)),
        "random": degree_decreasing_matrix(field, args.order, rng),
    }
    for name, m in targets.items():
        a = solve_conjugator(m)
        ok = a @ shift @ a.inverse() == m
        print(f"== {name}: conjugation verified: {ok}")
        for n, p in enumerate(matrix_to_polys(a)[:5]):
            print(f"   p_{n} = {p}")
        print()


if __name__ == "__main__":
    main()
