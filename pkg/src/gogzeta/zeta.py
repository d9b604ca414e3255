"""Reciprocal zeta functions of graphs and graphs of groups, and Euler-product checks."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .gog import GraphOfGroups, enumerate_gog_primes, half_edge_matrix
from .graph import Graph, adjacency_matrix, valency_matrix
from .poly import (
    ONE,
    PolyMatrix,
    Polynomial,
    compact,
    det_int,
    euler_product_truncation,
    exact_quotient,
    series_reciprocal,
)

ONE_MINUS_U2 = Polynomial((1, 0, -1))
ONE_PLUS_U = Polynomial((1, 1))
ONE_MINUS_U = Polynomial((1, -1))


class LegsNotSupported(ValueError):
    pass


def _with_power(p: Polynomial, base: Polynomial, e: int) -> Polynomial:
    return p * base ** e if e >= 0 else exact_quotient(p, base ** (-e))


def three_term_core(graph: Graph, charges) -> Polynomial:
    """det(I - CAu + (CQ - I)u^2) for integer or rational charges."""
    n = graph.n
    c = [Fraction(x) for x in charges]
    a = adjacency_matrix(graph)
    q = valency_matrix(graph)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            c0 = 1 if i == j else 0
            c1 = -c[i] * int(a[i, j])
            c2 = c[i] * int(q[i, j]) - c0
            row.append(Polynomial((c0, c1, c2)))
        rows.append(row)
    return det_int(PolyMatrix.from_rows(rows))


def zeta_graph(g: Graph) -> Polynomial:
    """(1-u^2)^(b1-1) det(I - Au + (Q-I)u^2) for a graph without legs."""
    if g.l:
        raise LegsNotSupported("graph has legs; use the graph-of-groups formulas with unit charges")
    return _with_power(three_term_core(g, [1] * g.n), ONE_MINUS_U2, g.b1 - 1)


def zeta_gog_two_term(x: GraphOfGroups) -> Polynomial:
    w = half_edge_matrix(x)
    return det_int(PolyMatrix.pencil(np.eye(len(w), dtype=np.int64), -w))


def zeta_gog_three_term(x: GraphOfGroups | Graph, charges=None) -> Polynomial:
    """(1-u^2)^(b1-1) (1+u)^l det(I - CAu + (CQ-I)u^2).

    ``charges`` may override the group orders with arbitrary rationals; the
    result then need not have integer coefficients.
    """
    g = x.graph if isinstance(x, GraphOfGroups) else x
    if charges is None:
        charges = x.charges if isinstance(x, GraphOfGroups) else [1] * g.n
    core = three_term_core(g, charges) * ONE_PLUS_U ** g.l
    return _with_power(core, ONE_MINUS_U2, g.b1 - 1)


def zeta_inverse(x: GraphOfGroups | Graph) -> Polynomial:
    """Reciprocal zeta of a graph (legs allowed) or a graph of groups."""
    if isinstance(x, Graph):
        return zeta_graph(x) if not x.l else zeta_gog_three_term(x)
    return zeta_gog_three_term(x)


def as_gog(x: GraphOfGroups | Graph) -> GraphOfGroups:
    return x if isinstance(x, GraphOfGroups) else GraphOfGroups.from_charges(x, [1] * x.n)


def trace_powers(x: GraphOfGroups, n_max: int) -> list[int]:
    """tr W^n for n = 1..n_max in exact integer arithmetic."""
    w = half_edge_matrix(x).astype(object)
    p = w.copy()
    out = []
    for _ in range(n_max):
        out.append(int(np.trace(p)))
        p = p.dot(w)
    return out


def verify_euler(x: GraphOfGroups | Graph, order: int, allow_big: bool = False) -> dict:
    """Compare the series of 1/zeta^-1 with the Euler product over enumerated primes."""
    gog = as_gog(x)
    series = series_reciprocal(zeta_inverse(x), order)
    primes = enumerate_gog_primes(gog, order, allow_big) if order >= 1 else []
    euler = euler_product_truncation([p.length for p in primes], order)
    mismatch = next((i for i in range(order + 1) if series[i] != euler[i]), None)
    return {
        "order": order,
        "ok": mismatch is None,
        "first_mismatch": mismatch,
        "primes": len(primes),
        "series": [_num(v) for v in series],
        "euler": [_num(v) for v in euler],
    }


def _num(v: Fraction):
    return int(v) if v.denominator == 1 else str(v)


# -- factored display ------------------------------------------------------------

def _factor_key(p: Polynomial):
    return (p.degree, tuple(abs(c) for c in p.coeffs), p.coeffs)


def _sympy_factors(p: Polynomial) -> tuple[int, list[tuple[Polynomial, int]]]:
    import sympy

    u = sympy.Symbol("u")
    expr = sum(sympy.Integer(int(c)) * u ** i for i, c in enumerate(p.coeffs))
    const, facs = sympy.factor_list(sympy.Poly(expr, u, domain="ZZ"))
    const = int(const)
    out = []
    for f, e in facs:
        coeffs = [int(c) for c in reversed(f.all_coeffs())]
        if coeffs[0] < 0:
            coeffs = [-c for c in coeffs]
            const *= (-1) ** e
        out.append((Polynomial(tuple(coeffs)), int(e)))
    out.sort(key=lambda t: _factor_key(t[0]))
    return const, out


def factored(x: GraphOfGroups | Graph) -> list[tuple[Polynomial, int]]:
    """Structural prefactors, then the irreducible factors of the determinant part."""
    g = x.graph if isinstance(x, GraphOfGroups) else x
    full = zeta_inverse(x)
    pre: list[tuple[Polynomial, int]] = []
    rest = full
    e = g.b1 - 1
    if e > 0:
        pre.append((ONE_MINUS_U2, e))
        rest = exact_quotient(rest, ONE_MINUS_U2 ** e)
    if g.l and e >= 0:
        pre.append((ONE_PLUS_U, g.l))
        rest = exact_quotient(rest, ONE_PLUS_U ** g.l)
    const, facs = _sympy_factors(rest) if rest.degree > 0 else (int(rest[0]), [])
    # regroup (1-u)^a (1+u)^b of the remainder into (1-u^2)^min(a, b)
    exps = dict((p.coeffs, k) for p, k in facs)
    both = min(exps.get(ONE_MINUS_U.coeffs, 0), exps.get(ONE_PLUS_U.coeffs, 0))
    if both:
        facs = [(p, k - both if p in (ONE_MINUS_U, ONE_PLUS_U) else k) for p, k in facs]
        facs = [t for t in facs if t[1]]
        if pre and pre[0][0] == ONE_MINUS_U2:
            pre[0] = (ONE_MINUS_U2, pre[0][1] + both)
        else:
            pre.insert(0, (ONE_MINUS_U2, both))
    if const != 1:
        pre.insert(0, (Polynomial.const(const), 1))
    return pre + facs


def factored_text(factors: list[tuple[Polynomial, int]]) -> str:
    if len(factors) == 1 and factors[0][1] == 1:
        return compact(factors[0][0])
    parts = []
    for p, e in factors:
        if p.degree == 0:
            parts.append(str(p[0]))
            continue
        s = f"({compact(p)})"
        parts.append(s if e == 1 else f"{s}^{e}")
    return " ".join(parts) or "1"


def factor_text(p: Polynomial) -> str:
    """Irreducible factorisation over Z of an arbitrary integer polynomial, for display."""
    if p.degree <= 0:
        return compact(p)
    const, facs = _sympy_factors(p)
    return factored_text(([(Polynomial.const(const), 1)] if const != 1 else []) + facs)


def zeta_report(x: GraphOfGroups | Graph, euler: int | None = None, allow_big: bool = False) -> dict:
    zi = zeta_inverse(x)
    facs = factored(x)
    rep = {
        "zeta_inv": zi.to_list(),
        "zeta_inv_text": compact(zi),
        "factors": [[compact(p), e] for p, e in facs],
        "factored_text": factored_text(facs),
    }
    if isinstance(x, GraphOfGroups):
        two = zeta_gog_two_term(x)
        rep["two_term_agrees"] = two == zi
    if euler is not None:
        rep["euler_check"] = verify_euler(x, euler, allow_big)
    return rep


def report_ok(rep: dict) -> bool:
    return rep.get("two_term_agrees", True) and rep.get("euler_check", {}).get("ok", True)


def product(polys) -> Polynomial:
    acc = ONE
    for p in polys:
        acc = acc * p
    return acc
