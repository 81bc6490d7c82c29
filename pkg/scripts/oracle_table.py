"""Groebner dimension of every presented tensor pair next to the profile formulas."""

from itertools import combinations_with_replacement

from tensordim.engine import dim_tensor_af_af, dim_tensor_thm27
from tensordim.fixtures import presented_fixtures
from tensordim.groebner import ideal_dimension, tensor_presentation
from tensordim.profile import profile_from_presentation


def main():
    fx = presented_fixtures()
    rows = []
    for a, b in combinations_with_replacement(sorted(fx), 2):
        A, B = profile_from_presentation(fx[a]), profile_from_presentation(fx[b])
        oracle = ideal_dimension(tensor_presentation(fx[a], fx[b]))
        af = dim_tensor_af_af(A.dim, A.td_total, B.dim, B.td_total)
        general = dim_tensor_thm27(A, B).value
        rows.append((a, b, oracle, af, general))
    wa = max(len(r[0]) for r in rows)
    wb = max(len(r[1]) for r in rows)
    print(f"{'A':<{wa}}  {'B':<{wb}}  oracle  af_af  general")
    for a, b, o, f, g in rows:
        flag = "" if o == f == g else "  MISMATCH"
        print(f"{a:<{wa}}  {b:<{wb}}  {o:>6}  {f:>5}  {g:>7}{flag}")
    print(f"{len(rows)} pairs, {sum(o == f == g for _, _, o, f, g in rows)} agree")


if __name__ == "__main__":
    main()
