"""Edge-trivial graphs of groups: charges, the half-edge matrix W, path enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

import numpy as np

from .action import FiniteGroupAction
from .graph import Graph, build_graph, check_enumeration, minimal_period, canonical_rotation


@dataclass(frozen=True, eq=False)
class GraphOfGroups:
    """A graph with a finite group at each vertex.

    ``vertex_groups[v]`` lists element ids with the identity ``0`` first.  For
    a quotient these are ids in ``action`` (the vertex stabiliser); for a
    charges-only object they are abstract indices ``0..c(v)-1``.
    """

    graph: Graph
    vertex_groups: tuple[tuple[int, ...], ...]
    action: FiniteGroupAction | None = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "vertex_groups", tuple(tuple(int(x) for x in g) for g in self.vertex_groups))
        if len(self.vertex_groups) != self.graph.n:
            raise ValueError("need one vertex group per vertex")
        for v, grp in enumerate(self.vertex_groups):
            if not grp or grp[0] != 0 or len(set(grp)) != len(grp):
                raise ValueError(f"vertex group at {v} must list distinct ids starting with identity 0")

    @classmethod
    def from_charges(cls, graph: Graph, charges: Sequence[int]) -> "GraphOfGroups":
        if len(charges) != graph.n:
            raise ValueError("need one charge per vertex")
        for c in charges:
            if int(c) != c or c < 1:
                raise ValueError(f"charges must be positive integers, got {c!r}")
        return cls(graph, tuple(tuple(range(int(c))) for c in charges))

    @property
    def charges(self) -> tuple[int, ...]:
        return tuple(len(g) for g in self.vertex_groups)

    def __eq__(self, other):
        if not isinstance(other, GraphOfGroups):
            return NotImplemented
        return self.graph == other.graph and self.vertex_groups == other.vertex_groups

    def __hash__(self):
        return hash((self.graph, self.vertex_groups))


def gog_from_description(description: Mapping) -> GraphOfGroups:
    g = build_graph(description)
    raw = description.get("charges", {})
    charges = [int(raw.get(v, 1)) for v in g.vertex_labels]
    return GraphOfGroups.from_charges(g, charges)


def half_edge_matrix(x: GraphOfGroups) -> np.ndarray:
    """W[h, h'] = c(r(h'))-1 if h' = hbar; c(r(h')) if r(hbar) = r(h') otherwise; else 0."""
    g = x.graph
    c = x.charges
    w = np.zeros((g.k, g.k), dtype=np.int64)
    for h in range(g.k):
        hb = g.involution[h]
        for h2 in g.out[g.root[hb]]:
            w[h, h2] = c[g.root[h2]] - 1 if h2 == hb else c[g.root[h2]]
    return w


def charge_matrix(x: GraphOfGroups) -> np.ndarray:
    return np.diag(x.charges).astype(np.int64)


@dataclass(frozen=True, order=True)
class GoGPath:
    """``g_0 h_1 g_1 h_2 ... g_{n-1} h_n``; ``g_j`` lives at the root of ``h_{j+1}``."""

    half_edges: tuple[int, ...]
    elements: tuple[int, ...]

    def __post_init__(self):
        if len(self.half_edges) != len(self.elements):
            raise ValueError("a path has one group element per half-edge")

    @property
    def length(self) -> int:
        return len(self.half_edges)

    @property
    def units(self) -> tuple[tuple[int, int], ...]:
        """Rotation units (h_j, g_{j-1}); rotating a closed path rotates these."""
        return tuple(zip(self.half_edges, self.elements))

    @classmethod
    def from_units(cls, units: Sequence[tuple[int, int]]) -> "GoGPath":
        return cls(tuple(u[0] for u in units), tuple(u[1] for u in units))

    def power(self, k: int) -> "GoGPath":
        return GoGPath(self.half_edges * k, self.elements * k)

    def rotate(self, m: int) -> "GoGPath":
        u = self.units
        m %= len(u)
        return GoGPath.from_units(u[m:] + u[:m])


@dataclass(frozen=True, order=True)
class GoGPrime:
    length: int
    path: GoGPath

    @classmethod
    def from_path(cls, p: GoGPath) -> "GoGPrime":
        return cls(p.length, GoGPath.from_units(canonical_rotation(p.units)))


def is_gog_path(x: GraphOfGroups, p: GoGPath) -> bool:
    g = x.graph
    hs = p.half_edges
    if not hs:
        return False
    for j, (h, el) in enumerate(p.units):
        if el not in x.vertex_groups[g.root[h]]:
            return False
        if j and g.root[h] != g.terminal(hs[j - 1]):
            return False
    return True


def is_closed_gog(x: GraphOfGroups, p: GoGPath) -> bool:
    return is_gog_path(x, p) and x.graph.terminal(p.half_edges[-1]) == x.graph.root[p.half_edges[0]]


def is_reduced_gog(x: GraphOfGroups, p: GoGPath, cyclic: bool = True) -> bool:
    """Reduced: at each junction j, h_{j+1} != hbar_j or g_j is not the identity."""
    inv = x.graph.involution
    hs, gs = p.half_edges, p.elements
    n = len(hs)
    last = n if cyclic else n - 1
    for j in range(last):
        nxt = (j + 1) % n
        if hs[nxt] == inv[hs[j]] and gs[nxt] == 0:
            return False
    return True


def _gog_branching(x: GraphOfGroups) -> int:
    w = half_edge_matrix(x)
    return int(w.sum(axis=1).max()) if w.size else 0


def enumerate_gog_closed_reduced(x: GraphOfGroups, n: int, allow_big: bool = False) -> int:
    """Count closed reduced paths of length n.

    Depth-first over half-edge sequences; each junction contributes the number
    of admissible group elements (c, or c-1 at a backtrack).
    """
    if n < 1:
        raise ValueError("n must be positive")
    check_enumeration(n, _gog_branching(x), allow_big)
    g = x.graph
    inv, root, out = g.involution, g.root, g.out
    c = x.charges

    def mult(prev: int, nxt: int) -> int:
        cv = c[root[nxt]]
        return cv - 1 if nxt == inv[prev] else cv

    total = 0
    path = []

    def extend(depth: int, weight: int):
        nonlocal total
        last = path[-1]
        if depth == n:
            first = path[0]
            if root[first] == root[inv[last]]:
                total += weight * mult(last, first)
            return
        for h in out[root[inv[last]]]:
            w = mult(last, h)
            if w:
                path.append(h)
                extend(depth + 1, weight * w)
                path.pop()

    for h1 in range(g.k):
        path.append(h1)
        extend(1, 1)
        path.pop()
    return total


def _closed_reduced_unit_paths(x: GraphOfGroups, n: int, first_min: bool) -> Iterator[tuple]:
    g = x.graph
    inv, root, out = g.involution, g.root, g.out
    groups = x.vertex_groups
    units: list[tuple[int, int]] = []

    def extend(depth: int):
        h_last = units[-1][0]
        if depth == n:
            h1, g0 = units[0]
            if root[h1] == root[inv[h_last]] and (h1 != inv[h_last] or g0 != 0):
                yield tuple(units)
            return
        hb = inv[h_last]
        for h in out[root[hb]]:
            for el in groups[root[h]]:
                if h == hb and el == 0:
                    continue
                u = (h, el)
                if first_min and u < units[0]:
                    continue
                units.append(u)
                yield from extend(depth + 1)
                units.pop()

    for h1 in range(g.k):
        for el in groups[root[h1]]:
            units.append((h1, el))
            yield from extend(1)
            units.pop()


def closed_reduced_gog_paths(x: GraphOfGroups, n: int) -> list[GoGPath]:
    """Explicit list of closed reduced paths of length n (small cases only)."""
    return [GoGPath.from_units(u) for u in _closed_reduced_unit_paths(x, n, first_min=False)]


def enumerate_gog_primes(x: GraphOfGroups, max_len: int, allow_big: bool = False) -> list[GoGPrime]:
    """All primes of length <= max_len with their canonical (least) rotation."""
    if max_len < 1:
        raise ValueError("max_len must be positive")
    check_enumeration(max_len, _gog_branching(x), allow_big)
    out = []
    for n in range(1, max_len + 1):
        for u in _closed_reduced_unit_paths(x, n, first_min=True):
            if minimal_period(u) == n and canonical_rotation(u) == u:
                out.append(GoGPrime(n, GoGPath.from_units(u)))
    return sorted(out)


def split_leg(x: GraphOfGroups, leg: int) -> GraphOfGroups:
    """Replace ``leg`` by an edge to a new vertex carrying a group of order 2.

    Half-edge ids are kept: the old leg id becomes the outgoing half-edge of
    the new edge and the new vertex's half-edge is appended with id ``k``.
    The new vertex is appended with id ``n``; its group is abstract ``(0, 1)``.
    """
    g = x.graph
    if not (0 <= leg < g.k) or not g.is_leg(leg):
        raise ValueError(f"half-edge {leg} is not a leg")
    new_v, new_h = g.n, g.k
    root = g.root + (new_v,)
    inv = list(g.involution) + [leg]
    inv[leg] = new_h
    label = f"*{g.half_edge_labels[leg]}"
    vlab = "*" + g.vertex_labels[g.root[leg]] + "." + g.half_edge_labels[leg]
    new_graph = Graph(root, tuple(inv), g.vertex_labels + (vlab,), g.half_edge_labels + (label,))
    return GraphOfGroups(new_graph, x.vertex_groups + ((0, 1),))
