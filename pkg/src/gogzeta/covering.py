"""Quotients Y -> Y//G as graphs of groups: sheets, Frobenius elements, lifts, images, splitting."""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .action import (
    ActionClass,
    FiniteGroupAction,
    NotEdgeFreeError,
    Projection,
    classify_action,
    quotient_graph,
    stabilizer,
)
from .gog import GoGPath, GoGPrime, GraphOfGroups, enumerate_gog_primes
from .graph import GraphPrime, enumerate_primes, is_closed, minimal_period, vertex_word


class CoveringError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class CoveringData:
    action: FiniteGroupAction
    quotient: GraphOfGroups
    projection: Projection
    tree_x: frozenset  # half-edges of X in the spanning tree
    tree_y: frozenset  # their identity lifts
    lift_of_vertex: tuple[int, ...]  # v -> v^T
    identity_lift: tuple[int, ...]  # h -> h^S
    frobenius: tuple[int, ...]  # h -> F(h)
    sheet_number: tuple[int, ...]  # f -> N(f)
    tree_seed: int = 0
    choice_seed: int | None = None

    @property
    def graph_y(self):
        return self.action.graph

    @property
    def graph_x(self):
        return self.quotient.graph

    @property
    def degree(self) -> int:
        return self.action.order

    def validate(self) -> None:
        """Check the defining identities of sheets and Frobenius elements."""
        a, y, x = self.action, self.graph_y, self.graph_x
        mul, inv = a.mul, a.inv
        for h in range(x.k):
            fh = self.frobenius[h]
            if mul[fh][self.frobenius[x.involution[h]]] != 0:
                raise CoveringError(f"F(hbar) != F(h)^-1 at {h}")
            if x.is_leg(h) and mul[fh][fh] != 0:
                raise CoveringError(f"F(l)^2 != 1 at leg {h}")
            if h in self.tree_x and fh != 0:
                raise CoveringError(f"tree half-edge {h} has nontrivial Frobenius")
            hs = self.identity_lift[h]
            if self.projection.half_edge[hs] != h or y.root[hs] != self.lift_of_vertex[x.root[h]]:
                raise CoveringError(f"identity lift of {h} is misplaced")
        for f in range(y.k):
            h = self.projection.half_edge[f]
            if a.half_edge_image(self.sheet_number[f], self.identity_lift[h]) != f:
                raise CoveringError(f"sheet number of {f} is wrong")
            if self.sheet_number[y.involution[f]] != mul[self.sheet_number[f]][self.frobenius[h]]:
                raise CoveringError(f"N(fbar) != N(f)F(pi f) at {f}")
        for v in range(x.n):
            if tuple(self.quotient.vertex_groups[v]) != stabilizer(a, self.lift_of_vertex[v]):
                raise CoveringError(f"vertex group at {v} is not the stabiliser of its lift")


def _pick(options: Sequence[int], rng: random.Random | None) -> int:
    options = sorted(options)
    return rng.choice(options) if rng is not None else options[0]


def quotient_graph_of_groups(
    a: FiniteGroupAction, tree_seed: int | None = None, choice_seed: int | None = None
) -> tuple[GraphOfGroups, CoveringData]:
    """Form Y//G with its covering data.

    The spanning tree of X is grown breadth-first from ``tree_seed`` over
    edges (never legs), lowest half-edge id first, and lifted to Y starting
    at the least preimage of the seed.  Every remaining free choice takes the
    least id.  ``choice_seed`` replaces those least-id choices (and the BFS
    neighbour order) by pseudo-random ones; outputs must not depend on it.
    """
    if classify_action(a) is ActionClass.NOT_EDGE_FREE:
        raise NotEdgeFreeError("the action is not edge-free; Y//G needs trivial half-edge stabilisers")
    y = a.graph
    x, proj = quotient_graph(a)
    rng = random.Random(choice_seed) if choice_seed is not None else None
    seed = 0 if tree_seed is None else int(tree_seed)
    if not 0 <= seed < x.n:
        raise ValueError(f"tree seed {seed} is not a vertex of the quotient")

    over_h: list[list[int]] = [[] for _ in range(x.k)]
    for f in range(y.k):
        over_h[proj.half_edge[f]].append(f)
    over_v: list[list[int]] = [[] for _ in range(x.n)]
    for w in range(y.n):
        over_v[proj.vertex[w]].append(w)

    lift_v: list[int | None] = [None] * x.n
    lift_h: list[int | None] = [None] * x.k
    frob: list[int | None] = [None] * x.k
    lift_v[seed] = _pick(over_v[seed], rng)

    def candidates(h: int) -> list[int]:
        return [f for f in over_h[h] if y.root[f] == lift_v[x.root[h]]]

    tree: set[int] = set()
    q = deque([seed])
    while q:
        v = q.popleft()
        outs = list(x.out[v])
        if rng is not None:
            rng.shuffle(outs)
        for h in outs:
            hb = x.involution[h]
            w = x.root[hb]
            if hb == h or lift_v[w] is not None:
                continue
            f = _pick(candidates(h), rng)
            lift_h[h], lift_h[hb] = f, y.involution[f]
            frob[h] = frob[hb] = 0
            lift_v[w] = y.root[y.involution[f]]
            tree |= {h, hb}
            q.append(w)

    for h in range(x.k):
        if lift_h[h] is not None:
            continue
        hb = x.involution[h]
        f = _pick(candidates(h), rng)
        fb = y.involution[f]
        lift_h[h] = f
        if hb == h:
            if fb == f:
                frob[h] = 0
            else:
                flips = [g for g in range(a.order) if a.half_edge_image(g, f) == fb]
                if len(flips) != 1:  # pragma: no cover - edge-freeness forces uniqueness
                    raise CoveringError("flip element over a leg is not unique")
                frob[h] = flips[0]
            continue
        target = y.root[fb]
        fh = _pick([g for g in range(a.order) if a.vertex_image(g, lift_v[x.root[hb]]) == target], rng)
        frob[h], frob[hb] = fh, a.inv[fh]
        lift_h[hb] = a.half_edge_image(a.inv[fh], fb)

    sheet = [0] * y.k
    for h in range(x.k):
        for g in range(a.order):
            sheet[a.half_edge_image(g, lift_h[h])] = g

    groups = tuple(stabilizer(a, lift_v[v]) for v in range(x.n))
    gog = GraphOfGroups(x, groups, a)
    tree_y = frozenset(lift_h[h] for h in tree)
    cov = CoveringData(
        a, gog, proj, frozenset(tree), tree_y, tuple(lift_v), tuple(lift_h), tuple(frob), tuple(sheet),
        seed, choice_seed,
    )
    cov.validate()
    return gog, cov


# -- paths ---------------------------------------------------------------------

def _require_concrete(c: CoveringData, q: GoGPath) -> None:
    if not q.half_edges:
        raise CoveringError("empty path")
    groups = c.quotient.vertex_groups
    root = c.graph_x.root
    for h, g in q.units:
        if g not in groups[root[h]]:
            raise CoveringError(f"element {g} does not lie in the group at the root of half-edge {h}")


def frobenius_of_path(c: CoveringData, q: GoGPath) -> int:
    """F(P) = g_0 F(h_1) g_1 F(h_2) ... g_{n-1} F(h_n)."""
    _require_concrete(c, q)
    mul = c.action.mul
    acc = 0
    for h, g in q.units:
        acc = mul[mul[acc][g]][c.frobenius[h]]
    return acc


def lift_path(c: CoveringData, q: GoGPath, sheet: int = 0) -> tuple[int, ...]:
    """Lift starting on sheet ``sheet``: f_j = sheet * gt_j * h_j^S."""
    _require_concrete(c, q)
    a = c.action
    mul = a.mul
    out = []
    acc = 0  # g_0 F(h_1) g_1 ... F(h_{j-1})
    for h, g in q.units:
        acc = mul[acc][g]
        out.append(a.half_edge_image(mul[sheet][acc], c.identity_lift[h]))
        acc = mul[acc][c.frobenius[h]]
    return tuple(out)


def image_of_closed_path(c: CoveringData, p: Sequence[int]) -> GoGPath:
    """Image in X of a closed path of Y, with g_j = F(h_j)^-1 N(f_j)^-1 N(f_{j+1})."""
    y = c.graph_y
    p = tuple(p)
    if not is_closed(y, p):
        raise CoveringError("path is not closed")
    a = c.action
    mul, inv = a.mul, a.inv
    hs = tuple(c.projection.half_edge[f] for f in p)
    n = len(p)
    els = []
    for j in range(n):
        prev = (j - 1) % n
        f_prev, f_cur = p[prev], p[j]
        els.append(mul[mul[inv[c.frobenius[hs[prev]]]][inv[c.sheet_number[f_prev]]]][c.sheet_number[f_cur]])
    return GoGPath(hs, tuple(els))


# -- splitting -----------------------------------------------------------------

@dataclass(frozen=True)
class PrimeSplitting:
    base_prime: GoGPrime
    residual_degree: int
    num_primes_above: int
    primes_above: tuple[GraphPrime, ...]
    frobenius: int
    frobenius_class: int

    @property
    def f(self) -> int:
        return self.residual_degree

    @property
    def g(self) -> int:
        return self.num_primes_above


def split_prime(c: CoveringData, q: GoGPrime | GoGPath) -> PrimeSplitting:
    prime = q if isinstance(q, GoGPrime) else GoGPrime.from_path(q)
    path = prime.path
    fq = frobenius_of_path(c, path)
    f = c.action.element_order(fq)
    qf = path.power(f)
    above = sorted({GraphPrime.from_path(lift_path(c, qf, x)) for x in range(c.degree)})
    for p in above:
        if minimal_period(p.half_edges) != p.length or p.length != f * prime.length:
            raise CoveringError("lift of Q^f is not a prime of length f*l(Q)")
    if len(above) * f != c.degree:
        raise CoveringError("f*g != #G")
    return PrimeSplitting(prime, f, len(above), tuple(above), fq, c.action.class_of[fq])


def full_splitting_table(c: CoveringData, max_base_len: int, allow_big: bool = False) -> list[PrimeSplitting]:
    return [split_prime(c, q) for q in enumerate_gog_primes(c.quotient, max_base_len, allow_big)]


def partition_check(c: CoveringData, max_len: int, allow_big: bool = False) -> tuple[bool, str]:
    """Primes of Y of length <= max_len lie over exactly one base prime each."""
    seen: list[GraphPrime] = []
    for row in full_splitting_table(c, max_len, allow_big):
        if row.f * row.base_prime.length <= max_len:
            seen.extend(row.primes_above)
    expected = enumerate_primes(c.graph_y, max_len, allow_big)
    if sorted(seen) == expected:
        return True, f"{len(expected)} primes of length <= {max_len} partitioned"
    dup = len(seen) - len(set(seen))
    missing = len(set(expected) - set(seen))
    return False, f"{dup} duplicated, {missing} missing"


# -- display -------------------------------------------------------------------

def gog_path_name(c: CoveringData | GraphOfGroups, p: GoGPath) -> str:
    """Tokens like ``(234) [e0] [e3]``; identity elements are omitted."""
    gog = c.quotient if isinstance(c, CoveringData) else c
    labels = gog.graph.half_edge_labels
    names = gog.action.names if gog.action is not None else None
    toks = []
    for h, g in p.units:
        if g != 0:
            toks.append(names[g] if names else f"g{g}")
        toks.append(labels[h])
    return " ".join(toks)


def prime_name(c: CoveringData, p: GraphPrime) -> str:
    return vertex_word(c.graph_y, p.half_edges)


def splitting_row(c: CoveringData, row: PrimeSplitting) -> dict:
    return {
        "base": gog_path_name(c, row.base_prime.path),
        "length": row.base_prime.length,
        "frobenius": c.action.names[row.frobenius],
        "f": row.f,
        "g": row.g,
        "above": [prime_name(c, p) for p in row.primes_above],
    }
