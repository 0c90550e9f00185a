#!/usr/bin/env python3
"""Group sqrt(d) for squarefree d by Morita tail class.

Two rotation parameters land in the same class exactly when the
canonical rotations of their continued-fraction periods agree; this
scans a range of radicands and prints each class with its members.
"""

import argparse
from collections import defaultdict

from twistlab.contfrac import canonical_rotation, expand_surd
from twistlab.surd import QuadraticSurd


def squarefree(limit):
    flags = [True] * (limit + 1)
    k = 2
    while k * k <= limit:
        for m in range(k * k, limit + 1, k * k):
            flags[m] = False
        k += 1
    return [d for d in range(2, limit + 1) if flags[d]]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--limit", type=int, default=100, help="largest radicand")
    ap.add_argument("--min-size", type=int, default=1,
                    help="only print classes with at least this many members")
    args = ap.parse_args()

    classes = defaultdict(list)
    for d in squarefree(args.limit):
        cf = expand_surd(QuadraticSurd.sqrt_of(d))
        classes[canonical_rotation(cf.period)].append(d)

    print(f"{len(classes)} tail classes among sqrt(d), d squarefree <= {args.limit}\n")
    for period, members in sorted(classes.items(), key=lambda kv: (len(kv[0]), kv[0])):
        if len(members) >= args.min_size:
            word = ", ".join(map(str, period))
            print(f"  period ({word}): d = {members}")


if __name__ == "__main__":
    main()
