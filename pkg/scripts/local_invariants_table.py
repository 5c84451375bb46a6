#!/usr/bin/env python3
"""Tabulate the local invariants of every partition of a given weight.

Handy for eyeballing how degree and clique number move with the block
pattern, e.g. `python scripts/local_invariants_table.py 12 --sort degree`.
"""

import argparse

from partgraph.local_model import (
    degree_formula,
    local_clique_number,
    local_dimension,
    local_type,
)
from partgraph.partitions import enumerate_partitions


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("n", type=int, help="weight to tabulate")
    parser.add_argument("--sort", choices=["order", "degree", "clique"], default="order",
                        help="row order: enumeration order, by degree, or by clique number")
    args = parser.parse_args()

    rows = []
    for p in enumerate_partitions(args.n):
        T = local_type(p)
        rows.append((
            str(p),
            T.t,
            "".join(map(str, T.alpha)),
            "".join(map(str, T.beta)),
            degree_formula(T),
            local_clique_number(T),
            local_dimension(T),
        ))
    if args.sort == "degree":
        rows.sort(key=lambda row: (-row[4], row[0]))
    elif args.sort == "clique":
        rows.sort(key=lambda row: (-row[5], row[0]))

    width = max(len(row[0]) for row in rows)
    print(f"{'partition':<{width}}  t  alpha  beta  degree  clique  dim")
    for text, t, alpha, beta, degree, clique, dim in rows:
        print(f"{text:<{width}}  {t}  {alpha:<5}  {beta:<4}  {degree:>6}  {clique:>6}  {dim:>3}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
