#!/usr/bin/env python3
"""Print lens-space invariant tables: E6 closed forms and quantum-double values.

Usage: python scripts/lens_table.py [--pmax 12]
"""

import argparse

from tvo import FiniteAbelianGroup, e6_lens_reference, lens_p1, lens_p2, quantum_double_abelian
from tvo.cli import fmt_value


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pmax", type=int, default=12)
    args = ap.parse_args()

    print("E6 closed-form lens values")
    print(f"{'p':>3} {'Z(L(p,1))':>32} {'Z(L(p,2))':>32}")
    for p in range(1, args.pmax + 1):
        a = fmt_value(e6_lens_reference(p, 1))
        b = fmt_value(e6_lens_reference(p, 2)) if p % 2 == 1 else "-"
        print(f"{p:>3} {a:>32} {b:>32}")

    print()
    print("quantum double values (homomorphism counts gcd(p,n)/n)")
    for n in (2, 3, 4):
        data = quantum_double_abelian(FiniteAbelianGroup((n,)))
        row = [lens_p1(data, p).value.real for p in range(1, args.pmax + 1)]
        print(f"Z/{n}: " + " ".join(f"{v:.4f}" for v in row))

    print()
    print("orientation sensitivity: twisted double of Z/3 distinguishes L(3,1) from L(3,2)")
    import tvo

    d = tvo.twisted_double_cyclic(3, 1)
    for p in (3, 5, 7):
        print(f"  p={p}: L(p,1) {fmt_value(lens_p1(d, p).value)}   "
              f"L(p,2) {fmt_value(lens_p2(d, p).value)}")


if __name__ == "__main__":
    main()
