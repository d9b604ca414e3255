"""Quotients of K4 by its edge-free subgroups: b1, l, A, Q, C and the reciprocal zeta."""

from gogzeta import examples
from gogzeta.cli import fig2_row
from gogzeta.zeta import zeta_gog_three_term, zeta_gog_two_term


def main():
    print(f"{'G':<4} {'b1':>2} {'l':>2}  {'A':<16} {'Q':<16} {'C':<8} zeta^-1")
    for name in examples.K4_SUBGROUPS:
        c = examples.k4_covering(name)
        row = fig2_row(c)
        agree = zeta_gog_two_term(c.quotient) == zeta_gog_three_term(c.quotient)
        print(f"{name:<4} {row['b1']:>2} {row['l']:>2}  {str(row['A']):<16} {str(row['Q']):<16} "
              f"{str(row['C']):<8} {row['zeta_inv']}{'' if agree else '  (two-term disagrees!)'}")


if __name__ == "__main__":
    main()
