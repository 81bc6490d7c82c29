"""Sweep pullback_field(r) against fg_domain(d): where AF starts, tensor dimension, witness.

    python3 scripts/pullback_sweep.py --rmax 5 --dmax 3
"""

import argparse

from tensordim.engine import PreconditionError, dim_tensor_thm27
from tensordim.profile import fg_domain_profile, pullback_field_profile, smallest_afn


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rmax", type=int, default=5)
    ap.add_argument("--dmax", type=int, default=3)
    args = ap.parse_args()

    print(f"{'r':>2} {'AF from n':>9} {'d':>2} {'dim':>4}  witness")
    for r in range(1, args.rmax + 1):
        P = pullback_field_profile(r)
        for d in range(args.dmax + 1):
            try:
                tr = dim_tensor_thm27(P, fg_domain_profile(d))
            except PreconditionError:
                # the general formula needs A[1] to be AF, which fails for r >= 2
                print(f"{r:>2} {smallest_afn(P):>9} {d:>2} {'-':>4}  refused")
                continue
            print(f"{r:>2} {smallest_afn(P):>9} {d:>2} {tr.value:>4}  {tr.witness_str()}")


if __name__ == "__main__":
    main()
