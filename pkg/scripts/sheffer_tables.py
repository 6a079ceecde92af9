#!/usr/bin/env python3
"""Print translation polynomial tables and classifications for the three
classical weights, side by side.

Usage: python scripts/sheffer_tables.py [--order N] [--shift H]
"""

import argparse

from riordanlab import (
    Field,
    Weight,
    apply_matrix_to_poly,
    is_appell,
    is_binomial,
    matrix_to_pair,
    matrix_to_polys,
    shifted_power_matrix,
    translation_matrix,
)
from riordanlab.triangular import Polynomial


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--order", type=int, default=6)
    ap.add_argument("--shift", default="1")
    args = ap.parse_args()

    field = Field()
    weights = {
        "exponential": Weight.exponential(field, args.order, 1),
        "power-reduction": Weight.geometric(field, args.order, 1),
        "q-umbral (q=2)": Weight.q_factorial(field, args.order, -1, 2),
    }
    h = field.scalar(args.shift)

    for name, w in weights.items():
        t = translation_matrix(w, h)
        print(f"== {name}: w = [{', '.join(str(x) for x in w.w)}]")
        pair = matrix_to_pair(t, w)
        print(f"   translation by {h}: alpha = {pair.alpha!r}")
        print(f"   appell: {is_appell(t, w)}   binomial: {is_binomial(t, w)}")
        sq = Polynomial.from_values(field, [0, 0, 1])
        print(f"   T({sq}) = {apply_matrix_to_poly(t, sq)}")
        print("   shifted powers:")
        for n, p in enumerate(matrix_to_polys(shifted_power_matrix(w, h))):
            print(f"     ({h})-power {n}: {p}")
        print()


if __name__ == "__main__":
    main()
