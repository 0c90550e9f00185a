#!/usr/bin/env python3
"""Survey the two isomorphism levels across a twist family.

Takes a base curve, sweeps twist parameters t, and reports for each
member whether it is isomorphic to the base over Q or only over C.
The j-invariant stays constant across the whole family; the over-Q
verdict flips exactly with the squareness of t.
"""

import argparse
from fractions import Fraction

from twistlab.elliptic import (
    EllipticCurve,
    TwistParameter,
    j_invariant,
    q_isomorphic,
    twist,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--A", type=Fraction, default=Fraction(1))
    ap.add_argument("--B", type=Fraction, default=Fraction(1))
    ap.add_argument("--t-max", type=int, default=12)
    args = ap.parse_args()

    base = EllipticCurve(args.A, args.B)
    print(f"base curve {base}, j = {j_invariant(base)}\n")
    header = f"{'t':>6} | {'A_t':>10} {'B_t':>10} | over C | over Q | u"
    print(header)
    print("-" * len(header))
    for n in range(1, args.t_max + 1):
        for t in (Fraction(n), Fraction(-n)):
            e = twist(base, TwistParameter(t))
            ok, u = q_isomorphic(base, e)
            print(f"{str(t):>6} | {str(e.A):>10} {str(e.B):>10} | "
                  f"{'yes':>6} | {'yes' if ok else 'no':>6} | {u if u is not None else '-'}")


if __name__ == "__main__":
    main()
