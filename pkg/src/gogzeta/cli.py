"""Command line: ``gogzeta {zeta,zeta-gog,quotient,split,lfunction,factorize}``."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import io
from .action import NotEdgeFreeError, classify_action
from .covering import CoveringData, full_splitting_table, partition_check, quotient_graph_of_groups, splitting_row
from .graph import EnumerationTooLarge, adjacency_matrix, valency_matrix
from .lfunction import (
    factorization_check,
    l_euler_verify,
    l_function_three_term,
    l_function_two_term,
)
from .zeta import factor_text, factored, factored_text, report_ok, zeta_report


def _matrix_text(m: np.ndarray) -> str:
    if np.count_nonzero(m - np.diag(np.diag(m))) == 0 and len(m) > 1:
        return "diag(" + ",".join(str(int(x)) for x in np.diag(m)) + ")"
    return "[" + ",".join("[" + ",".join(str(int(x)) for x in row) + "]" for row in m) + "]"


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        sys.stdout.write(io.dumps(payload))
    else:
        sys.stdout.write("\n".join(lines) + "\n")


def _euler_line(chk: dict) -> str:
    return f"euler check through u^{chk['order']}: {'ok' if chk['ok'] else 'MISMATCH at u^%s' % chk.get('first_mismatch')}"


def cmd_zeta(args, gog: bool) -> int:
    obj = io.load_gog(args.file) if gog else io.load_graph(args.file)
    rep = zeta_report(obj, args.euler, args.allow_big)
    lines = [rep["factored_text"], f"expanded: {rep['zeta_inv_text']}"]
    if "two_term_agrees" in rep:
        lines.append(f"two-term formula agrees: {rep['two_term_agrees']}")
    if "euler_check" in rep:
        lines.append(_euler_line(rep["euler_check"]))
    _emit(args, rep, lines)
    return 0 if report_ok(rep) else 1


def _tree_seed(c_graph, seed):
    if seed is None:
        return None
    if seed in c_graph.vertex_labels:
        return c_graph.vertex_labels.index(seed)
    try:
        return int(seed)
    except ValueError:
        raise io.InputError(f"--seed {seed!r} is neither a quotient vertex label nor an index") from None


def fig2_row(c: CoveringData) -> dict:
    x = c.quotient
    g = x.graph
    return {
        "b1": g.b1,
        "l": g.l,
        "A": adjacency_matrix(g).tolist(),
        "Q": valency_matrix(g).tolist(),
        "C": list(x.charges),
        "zeta_inv": factored_text(factored(x)),
    }


def cmd_quotient(args) -> int:
    y = io.load_graph(args.graph)
    a = io.load_action(y, args.action)
    try:
        x, c = quotient_graph_of_groups(a, None, args.choice_seed)
        if args.seed is not None:
            x, c = quotient_graph_of_groups(a, _tree_seed(x.graph, args.seed), args.choice_seed)
    except NotEdgeFreeError:
        cls = classify_action(a).value
        sys.stderr.write(f"error: action is {cls}; quotients need an edge-free action\n")
        return 1
    row = fig2_row(c)
    cov = io.covering_to_dict(c)
    if args.out:
        Path(args.out).write_text(io.dumps(cov))
    if args.gog_out:
        Path(args.gog_out).write_text(io.dumps(cov["quotient"]))
    lines = [
        f"group order {a.order}, action {classify_action(a).value}",
        f"b1={row['b1']} l={row['l']} A={_matrix_text(np.array(row['A']))} "
        f"Q={_matrix_text(np.array(row['Q']))} C={_matrix_text(np.diag(row['C']))}",
        f"zeta^-1 = {row['zeta_inv']}",
    ]
    _emit(args, {"row": row, "covering": cov}, lines)
    return 0


def cmd_split(args) -> int:
    c = io.load_covering(args.covering)
    rows = [splitting_row(c, r) for r in full_splitting_table(c, args.max_len, args.allow_big)]
    ok, msg = partition_check(c, args.max_len, args.allow_big)
    w = max([len(r["base"]) for r in rows] + [4])
    lines = [f"{'base':<{w}}  len  f  g  F         above"]
    for r in rows:
        lines.append(f"{r['base']:<{w}}  {r['length']:>3}  {r['f']}  {r['g']}  {r['frobenius']:<9} {' '.join(r['above'])}")
    lines.append(f"partition check: {'ok' if ok else 'FAILED'} ({msg})")
    _emit(args, {"rows": rows, "partition_ok": ok, "partition": msg}, lines)
    return 0 if ok else 1


def cmd_lfunction(args) -> int:
    c = io.load_covering(args.covering)
    rho = io.load_representation(c.action, args.rep)
    two = l_function_two_term(c, rho)
    three = l_function_three_term(c, rho)
    agree = two.complex_form.max_abs_diff(three.complex_form) <= 1e-6 * max(
        1.0, max(abs(z) for z in three.complex_form.coeffs)
    )
    payload = {
        "name": rho.name,
        "dim": rho.dim,
        "l_inv": three.rounded.to_list() if three.rounded is not None else None,
        "l_inv_text": three.text(),
        "l_inv_complex": three.complex_form.to_list(),
        "residual": three.residual,
        "two_term_agrees": bool(agree),
    }
    if three.rounded is not None:
        payload["factored_text"] = factor_text(three.rounded)
    lines = [f"L^-1({rho.name}) = {payload.get('factored_text', three.text())}", f"expanded: {three.text()}",
             f"rounding residual {three.residual:.2e}",
             f"two-term formula agrees: {agree}"]
    ok = agree and three.rounded is not None
    if args.euler is not None:
        chk = l_euler_verify(c, rho, args.euler, args.allow_big)
        payload["euler_check"] = chk
        lines.append(f"euler check through u^{chk['order']}: {'ok' if chk['ok'] else 'MISMATCH'}")
        ok = ok and chk["ok"]
    _emit(args, payload, lines)
    return 0 if ok else 1


def cmd_factorize(args) -> int:
    c = io.load_covering(args.covering)
    reps = [io.load_representation(c.action, f) for f in args.irreps]
    rep = factorization_check(c, reps)
    lines = [f"zeta(Y)^-1 = {rep['zeta_y_inv']}", f"zeta(X)^-1 = {rep['zeta_x_inv']}"]
    for r in rep["l_functions"]:
        lines.append(f"L^-1({r['name']}) = {r['l_inv']}   (dim {r['dim']})")
    lines += [
        f"irreducibles: {rep['irreps_message']}",
        f"zeta(Y) = prod L^dim: {rep['product_ok']}",
        f"zeta(X)^-1 divides zeta(Y)^-1: {rep['divides']}",
        "verdict: " + ("ok" if rep["ok"] else "FAILED"),
    ]
    _emit(args, rep, lines)
    return 0 if rep["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gogzeta", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--allow-big", action="store_true", help="lift the enumeration size guard")
    sub = p.add_subparsers(dest="cmd", required=True)

    for name, helptext in (("zeta", "reciprocal zeta of a graph"), ("zeta-gog", "reciprocal zeta of a graph of groups")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("file")
        s.add_argument("--euler", type=int, metavar="N", help="check the Euler product through u^N")

    s = sub.add_parser("quotient", parents=[common], help="quotient graph of groups of an edge-free action")
    s.add_argument("graph")
    s.add_argument("action")
    s.add_argument("--seed", help="spanning-tree seed: quotient vertex label or index")
    s.add_argument("--choice-seed", type=int, help="randomise the remaining lift choices")
    s.add_argument("-o", "--out", help="write the covering file here")
    s.add_argument("--gog-out", help="write the quotient graph of groups here")

    s = sub.add_parser("split", parents=[common], help="splitting of base primes in the cover")
    s.add_argument("covering")
    s.add_argument("--max-len", type=int, default=4, metavar="N")

    s = sub.add_parser("lfunction", parents=[common], help="reciprocal L-function for a representation")
    s.add_argument("covering")
    s.add_argument("rep")
    s.add_argument("--euler", type=int, metavar="N")

    s = sub.add_parser("factorize", parents=[common], help="check zeta(Y) = prod L^dim over irreducibles")
    s.add_argument("covering")
    s.add_argument("irreps", nargs="+")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cmd in ("zeta", "zeta-gog"):
            return cmd_zeta(args, args.cmd == "zeta-gog")
        return {"quotient": cmd_quotient, "split": cmd_split, "lfunction": cmd_lfunction,
                "factorize": cmd_factorize}[args.cmd](args)
    except (io.InputError, EnumerationTooLarge) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
