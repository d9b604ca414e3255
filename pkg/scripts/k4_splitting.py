"""Splitting of base primes for a K4 quotient, e.g. ``python scripts/k4_splitting.py c3 4``."""

import sys

from gogzeta import examples
from gogzeta.covering import full_splitting_table, partition_check, splitting_row


def main(name="c3", max_len=4):
    c = examples.k4_covering(name)
    for row in full_splitting_table(c, max_len):
        r = splitting_row(c, row)
        print(f"{r['base']:<40} f={r['f']} g={r['g']} F={r['frobenius']:<10} {' '.join(r['above'])}")
    ok, msg = partition_check(c, max_len + 1)
    print("partition:", "ok" if ok else "FAILED", f"({msg})")


if __name__ == "__main__":
    args = sys.argv[1:]
    main(args[0] if args else "c3", int(args[1]) if len(args) > 1 else 4)
