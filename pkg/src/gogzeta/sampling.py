"""Random graphs of groups and random edge-free actions for property tests and experiments."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .action import FiniteGroupAction, GraphAutomorphism, generate_group
from .gog import GraphOfGroups, half_edge_matrix
from .graph import Graph, GraphValidationError
from .lfunction import Representation, check_irreps, from_generators, one_dimensional_characters


@dataclass
class GogSampler:
    max_vertices: int = 5
    max_edges: int = 7
    max_legs: int = 2
    max_charge: int = 4
    path_budget: int = 60_000  # cap on reduced paths of length `budget_len`
    budget_len: int = 10


def _random_connected(rng: random.Random, n: int, m: int, l: int) -> Graph:
    """Random spanning tree on n vertices plus extra edges (loops and multi-edges allowed)."""
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    while len(edges) < m:
        edges.append((rng.randrange(n), rng.randrange(n)))
    rng.shuffle(edges)
    root, inv = [], []
    for i, (a, b) in enumerate(edges):
        root += [a, b]
        inv += [2 * i + 1, 2 * i]
    for j in range(l):
        root.append(rng.randrange(n))
        inv.append(len(inv))
    return Graph(tuple(root), tuple(inv), tuple(str(v) for v in range(n)))


def reduced_path_count(x: GraphOfGroups, length: int) -> int:
    w = half_edge_matrix(x).astype(object)
    v = np.ones(len(w), dtype=object)
    for _ in range(length):
        v = w.dot(v)
    return int(v.sum())


def random_gog(rng: random.Random, cfg: GogSampler = GogSampler(), tries: int = 1000) -> GraphOfGroups:
    """Rejection sample a gog whose path count stays within the enumeration budget."""
    for _ in range(tries):
        n = rng.randint(1, cfg.max_vertices)
        m = rng.randint(n - 1, max(n - 1, cfg.max_edges))
        l = rng.randint(0, cfg.max_legs)
        if 2 * m + l == 0:
            continue
        g = _random_connected(rng, n, m, l)
        charges = [rng.randint(1, cfg.max_charge) for _ in range(n)]
        x = GraphOfGroups.from_charges(g, charges)
        if reduced_path_count(x, cfg.budget_len) <= cfg.path_budget:
            return x
    raise RuntimeError("no sample within the path budget")


# -- groups given by permutation generators -------------------------------------------

def _cyc(d: int) -> tuple[int, ...]:
    return tuple((i + 1) % d for i in range(d))


GROUPS: dict[str, list[tuple[int, ...]]] = {
    "C1": [],
    "C2": [_cyc(2)],
    "C3": [_cyc(3)],
    "C4": [_cyc(4)],
    "V4": [(1, 0, 3, 2), (2, 3, 0, 1)],
    "C5": [_cyc(5)],
    "S3": [(1, 0, 2), (1, 2, 0)],
    "C6": [_cyc(6)],
    "C7": [_cyc(7)],
    "C8": [_cyc(8)],
    "D4": [(1, 2, 3, 0), (3, 2, 1, 0)],
    "C2xC4": [(1, 0, 2, 3, 4, 5), (0, 1, 3, 4, 5, 2)],
    "C2^3": [(1, 0, 2, 3, 4, 5), (0, 1, 3, 2, 4, 5), (0, 1, 2, 3, 5, 4)],
}

# two-dimensional irreducibles, images of the listed generators
TWO_DIM: dict[str, list[list[list[float]]]] = {
    "S3": [[[-1, 0], [0, 1]], [[-0.5, -np.sqrt(3) / 2], [np.sqrt(3) / 2, -0.5]]],
    "D4": [[[0, -1], [1, 0]], [[1, 0], [0, -1]]],
}


@dataclass
class PermGroup:
    name: str
    elements: list[tuple[int, ...]]
    gens: list[int]
    mul: list[list[int]] = field(repr=False)
    inv: list[int] = field(repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)


def perm_group(name: str) -> PermGroup:
    gens = GROUPS[name]
    size = len(gens[0]) if gens else 1
    ident = tuple(range(size))
    elems, index = [ident], {ident: 0}
    i = 0
    while i < len(elems):
        x = elems[i]
        for s in gens:
            y = tuple(s[x[j]] for j in range(size))
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
        i += 1
    mul = [[index[tuple(a[b[j]] for j in range(size))] for b in elems] for a in elems]
    inv = [row.index(0) for row in mul]
    return PermGroup(name, elems, [index[s] for s in gens], mul, inv)


def _subgroup(g: PermGroup, x: int) -> tuple[int, ...]:
    out, y = [0], x
    while y != 0:
        out.append(y)
        y = g.mul[y][x]
    return tuple(sorted(set(out)))


@dataclass
class RandomAction:
    action: FiniteGroupAction
    group_name: str
    generator_ids: tuple[int, ...]


def random_edge_free_action(rng: random.Random, max_order: int = 8, max_vertices: int = 3,
                            max_edges: int = 4, max_legs: int = 2, max_half_edges: int = 48,
                            tries: int = 500) -> RandomAction:
    """Build Y from a random base graph X with vertex subgroups and edge voltages.

    Half-edges of Y are pairs (h, g); G acts by left multiplication, so the
    action is free on half-edges.  Vertices are cosets g H_v.  Edge voltages
    a give inv(h, g) = (hbar, g a); a leg is either fixed or flipped by an
    involution t of G.  Disconnected results are rejected.
    """
    names = [k for k in GROUPS if perm_group(k).order <= max_order]
    for _ in range(tries):
        grp = perm_group(rng.choice(names))
        d = grp.order
        n = rng.randint(1, max_vertices)
        m = rng.randint(n - 1, max(n - 1, max_edges))
        l = rng.randint(0, max_legs)
        if 2 * m + l == 0 or d * (2 * m + l) > max_half_edges:
            continue
        base = _random_connected(rng, n, m, l)
        subs = [_subgroup(grp, rng.randrange(d)) if rng.random() < 0.6 else (0,) for _ in range(n)]
        involutions = [x for x in range(1, d) if grp.mul[x][x] == 0]

        cosets: list[dict[int, int]] = []  # per base vertex: element -> coset index
        vlabels = []
        for v in range(n):
            table: dict[int, int] = {}
            for gx in range(d):
                if gx in table:
                    continue
                idx = len(vlabels)
                vlabels.append(f"{v}.{len(set(table.values()))}")
                for s in subs[v]:
                    table[grp.mul[gx][s]] = idx
            cosets.append(table)

        k = base.k
        hid = lambda h, gx: h * d + gx  # noqa: E731
        root = [0] * (k * d)
        inv = [0] * (k * d)
        voltage = {}
        for h in range(k):
            hb = base.involution[h]
            if hb == h:
                t = rng.choice(involutions) if involutions and rng.random() < 0.6 else 0
                voltage[h] = t
            elif h < hb:
                a = rng.randrange(d)
                voltage[h], voltage[hb] = a, grp.inv[a]
        for h in range(k):
            for gx in range(d):
                root[hid(h, gx)] = cosets[base.root[h]][gx]
                inv[hid(h, gx)] = hid(base.involution[h], grp.mul[gx][voltage[h]])
        try:
            y = Graph(tuple(root), tuple(inv), tuple(vlabels))
        except GraphValidationError:
            continue
        auts = []
        for s in grp.gens:
            vperm = [0] * y.n
            hperm = [0] * y.k
            for h in range(k):
                for gx in range(d):
                    sg = grp.mul[s][gx]
                    hperm[hid(h, gx)] = hid(h, sg)
                    vperm[cosets[base.root[h]][gx]] = cosets[base.root[h]][sg]
            auts.append(GraphAutomorphism(tuple(vperm), tuple(hperm)))
        act = generate_group(y, auts)
        if act.order != d:
            continue
        return RandomAction(act, grp.name, act.generators)
    raise RuntimeError("could not sample a connected edge-free action")


def known_irreps(ra: RandomAction) -> list[Representation] | None:
    """All irreducibles when available: linear characters plus a tabulated 2-dim one."""
    a = ra.action
    chars = one_dimensional_characters(a, ra.generator_ids)
    if ra.group_name in TWO_DIM:
        mats = TWO_DIM[ra.group_name]
        chars.append(from_generators(a, {g: np.array(mt) for g, mt in zip(ra.generator_ids, mats)}, "std"))
    ok, _ = check_irreps(a, chars)
    return chars if ok else None
