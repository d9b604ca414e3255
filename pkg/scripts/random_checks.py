"""Random graphs of groups and random edge-free actions against the enumeration oracles.

    python scripts/random_checks.py --gogs 200 --actions 50 --seed 1
"""

import argparse
import random
import time

from gogzeta.covering import quotient_graph_of_groups
from gogzeta.gog import enumerate_gog_closed_reduced
from gogzeta.lfunction import factorization_check, l_inverse, regular_rep, trivial_rep
from gogzeta.sampling import GogSampler, known_irreps, random_edge_free_action, random_gog
from gogzeta.zeta import trace_powers, verify_euler, zeta_gog_three_term, zeta_gog_two_term, zeta_inverse


def check_gogs(rng, count, order):
    bad = 0
    for _ in range(count):
        x = random_gog(rng, GogSampler())
        tr = trace_powers(x, order)
        ok = zeta_gog_two_term(x) == zeta_gog_three_term(x) and verify_euler(x, order)["ok"]
        ok = ok and all(enumerate_gog_closed_reduced(x, n) == tr[n - 1] for n in range(1, order + 1))
        bad += not ok
    return bad


def check_actions(rng, count, max_order):
    bad = 0
    for _ in range(count):
        ra = random_edge_free_action(rng, max_order=max_order)
        c = quotient_graph_of_groups(ra.action, None, rng.randrange(1000))[1]
        ok = l_inverse(c, trivial_rep(ra.action)) == zeta_inverse(c.quotient)
        ok = ok and l_inverse(c, regular_rep(ra.action)) == zeta_inverse(c.graph_y)
        irreps = known_irreps(ra)
        if irreps is not None:
            ok = ok and factorization_check(c, irreps)["ok"]
        bad += not ok
    return bad


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--gogs", type=int, default=100)
    p.add_argument("--actions", type=int, default=40)
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--max-group", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    a = p.parse_args()
    rng = random.Random(a.seed)
    t = time.time()
    b1 = check_gogs(rng, a.gogs, a.order)
    print(f"graphs of groups: {a.gogs - b1}/{a.gogs} ok ({time.time() - t:.1f}s)")
    t = time.time()
    b2 = check_actions(rng, a.actions, a.max_group)
    print(f"actions: {a.actions - b2}/{a.actions} ok ({time.time() - t:.1f}s)")
    raise SystemExit(1 if b1 or b2 else 0)


if __name__ == "__main__":
    main()
