"""Finite groups acting on graphs: closure, classification, orbits, quotients.

Composition convention: ``(a*b)(x) = a(b(x))``.
"""

from __future__ import annotations

import enum
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .graph import Graph, GraphValidationError


class NotEdgeFreeError(ValueError):
    pass


class AutomorphismError(ValueError):
    pass


class GroupTooLarge(RuntimeError):
    pass


# -- permutations and cycle notation -----------------------------------------

def parse_cycles(text: str, labels: Sequence[str]) -> tuple[int, ...]:
    """Parse cycle notation such as ``"(234)"``, ``"(2 3 4)"`` or ``"(12)(34)"``.

    Without whitespace or commas inside a cycle each character is one label.
    """
    index = {str(lab): i for i, lab in enumerate(labels)}
    perm = list(range(len(labels)))
    text = text.strip()
    if text in ("", "()", "e", "1", "id"):
        if text == "1" and "1" in index:
            raise AutomorphismError("ambiguous identity '1'; use '()'")
        return tuple(perm)
    cycles = re.findall(r"\(([^()]*)\)", text)
    if "".join(f"({c})" for c in cycles).replace(" ", "") != text.replace(" ", ""):
        raise AutomorphismError(f"malformed cycle notation {text!r}")
    seen: set[int] = set()
    for body in cycles:
        body = body.strip()
        if not body:
            continue
        tokens = re.split(r"[\s,]+", body) if re.search(r"[\s,]", body) else list(body)
        try:
            pts = [index[t] for t in tokens]
        except KeyError as exc:
            raise AutomorphismError(f"unknown label {exc.args[0]!r} in {text!r}") from None
        if len(set(pts)) != len(pts) or seen & set(pts):
            raise AutomorphismError(f"repeated point in {text!r}")
        seen |= set(pts)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a] = b
    return tuple(perm)


def cycle_string(perm: Sequence[int], labels: Sequence[str]) -> str:
    seen = set()
    parts = []
    sep = "" if all(len(str(x)) == 1 for x in labels) else " "
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(str(labels[x]))
            x = perm[x]
        parts.append("(" + sep.join(cyc) + ")")
    return "".join(parts) or "e"


# -- automorphisms -------------------------------------------------------------

@dataclass(frozen=True)
class GraphAutomorphism:
    vertex_perm: tuple[int, ...]
    half_edge_perm: tuple[int, ...]

    def __mul__(self, other: "GraphAutomorphism") -> "GraphAutomorphism":
        return GraphAutomorphism(
            tuple(self.vertex_perm[x] for x in other.vertex_perm),
            tuple(self.half_edge_perm[x] for x in other.half_edge_perm),
        )

    def inverse(self) -> "GraphAutomorphism":
        vi = [0] * len(self.vertex_perm)
        for i, x in enumerate(self.vertex_perm):
            vi[x] = i
        hi = [0] * len(self.half_edge_perm)
        for i, x in enumerate(self.half_edge_perm):
            hi[x] = i
        return GraphAutomorphism(tuple(vi), tuple(hi))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.vertex_perm)) and all(
            i == x for i, x in enumerate(self.half_edge_perm)
        )


def identity_automorphism(g: Graph) -> GraphAutomorphism:
    return GraphAutomorphism(tuple(range(g.n)), tuple(range(g.k)))


def validate_automorphism(g: Graph, a: GraphAutomorphism) -> None:
    if sorted(a.vertex_perm) != list(range(g.n)):
        raise AutomorphismError("vertex map is not a permutation")
    if sorted(a.half_edge_perm) != list(range(g.k)):
        raise AutomorphismError("half-edge map is not a permutation")
    for h in range(g.k):
        if g.root[a.half_edge_perm[h]] != a.vertex_perm[g.root[h]]:
            raise AutomorphismError(f"not equivariant with the root map at half-edge {h}")
        if a.half_edge_perm[g.involution[h]] != g.involution[a.half_edge_perm[h]]:
            raise AutomorphismError(f"not equivariant with the involution at half-edge {h}")


def automorphism_from_vertex_perm(g: Graph, vertex_perm: Sequence[int]) -> GraphAutomorphism:
    """Infer the half-edge map from a vertex permutation when it is forced.

    Parallel edges, loops and repeated legs make the inference ambiguous; an
    explicit half-edge map is required for those.
    """
    vertex_perm = tuple(vertex_perm)
    hmap = []
    for h in range(g.k):
        u, v = vertex_perm[g.root[h]], vertex_perm[g.terminal(h)]
        leg = g.is_leg(h)
        cands = [x for x in g.out[u] if g.terminal(x) == v and g.is_leg(x) == leg]
        if len(cands) != 1:
            raise AutomorphismError(
                f"half-edge image of {g.half_edge_labels[h]} is not determined by the vertex map; "
                "give the half-edge permutation explicitly"
            )
        hmap.append(cands[0])
    a = GraphAutomorphism(vertex_perm, tuple(hmap))
    validate_automorphism(g, a)
    return a


# -- group actions -------------------------------------------------------------

class ActionClass(enum.Enum):
    FREE = "free"
    EDGE_FREE = "edge_free_not_free"
    NOT_EDGE_FREE = "not_edge_free"


@dataclass(frozen=True, eq=False)
class FiniteGroupAction:
    graph: Graph
    elements: tuple[GraphAutomorphism, ...]
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    names: tuple[str, ...]
    generators: tuple[int, ...] = ()

    @property
    def order(self) -> int:
        return len(self.elements)

    def vertex_image(self, g: int, v: int) -> int:
        return self.elements[g].vertex_perm[v]

    def half_edge_image(self, g: int, h: int) -> int:
        return self.elements[g].half_edge_perm[h]

    def product(self, *gs: int) -> int:
        acc = 0
        for g in gs:
            acc = self.mul[acc][g]
        return acc

    def power(self, g: int, e: int) -> int:
        acc = 0
        for _ in range(e % self.element_order(g)):
            acc = self.mul[acc][g]
        return acc

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = self.mul[x][g]
            k += 1
        return k

    @cached_property
    def class_of(self) -> tuple[int, ...]:
        """Conjugacy class index of each element (classes numbered by least member)."""
        cls = [-1] * self.order
        nxt = 0
        for g in range(self.order):
            if cls[g] >= 0:
                continue
            for x in range(self.order):
                cls[self.mul[self.mul[x][g]][self.inv[x]]] = nxt
            nxt += 1
        return tuple(cls)

    def element_by_name(self, name: str) -> int:
        if name in self.names:
            return self.names.index(name)
        perm = parse_cycles(name, self.graph.vertex_labels)
        hits = [i for i, e in enumerate(self.elements) if e.vertex_perm == perm]
        if len(hits) != 1:
            raise KeyError(f"{name!r} does not name a unique group element")
        return hits[0]


def generate_group(
    graph: Graph,
    generators: Sequence[GraphAutomorphism],
    max_order: int = 5000,
) -> FiniteGroupAction:
    """Close a set of automorphisms under composition."""
    for a in generators:
        validate_automorphism(graph, a)
    ident = identity_automorphism(graph)
    elements = [ident]
    index = {ident: 0}
    q = deque([ident])
    while q:
        x = q.popleft()
        for s in generators:
            y = s * x
            if y not in index:
                if len(elements) >= max_order:
                    raise GroupTooLarge(f"closure exceeds max_order={max_order}")
                index[y] = len(elements)
                elements.append(y)
                q.append(y)
    mul = tuple(tuple(index[a * b] for b in elements) for a in elements)
    inv = tuple(row.index(0) for row in mul)
    vnames = [cycle_string(e.vertex_perm, graph.vertex_labels) for e in elements]
    names = []
    for e, vn in zip(elements, vnames):
        if vnames.count(vn) > 1:
            hn = cycle_string(e.half_edge_perm, [str(h) for h in range(graph.k)])
            vn = f"{vn}|{hn}" if not e.is_identity() else "e"
        names.append(vn)
    gens = tuple(index[s] for s in generators)
    return FiniteGroupAction(graph, tuple(elements), mul, inv, tuple(names), gens)


def classify_action(a: FiniteGroupAction) -> ActionClass:
    g = a.graph
    edge_free = all(
        a.half_edge_image(x, h) != h for x in range(1, a.order) for h in range(g.k)
    )
    if not edge_free:
        return ActionClass.NOT_EDGE_FREE
    vertex_free = all(
        a.vertex_image(x, v) != v for x in range(1, a.order) for v in range(g.n)
    )
    flips = any(
        a.half_edge_image(x, h) == hb for x in range(1, a.order) for h, hb in g.edges
    )
    return ActionClass.FREE if vertex_free and not flips else ActionClass.EDGE_FREE


def stabilizer(a: FiniteGroupAction, v: int) -> tuple[int, ...]:
    return tuple(x for x in range(a.order) if a.vertex_image(x, v) == v)


def orbit(a: FiniteGroupAction, h: int) -> tuple[int, ...]:
    return tuple(sorted({a.half_edge_image(x, h) for x in range(a.order)}))


def vertex_orbit(a: FiniteGroupAction, v: int) -> tuple[int, ...]:
    return tuple(sorted({a.vertex_image(x, v) for x in range(a.order)}))


@dataclass(frozen=True)
class Projection:
    vertex: tuple[int, ...]
    half_edge: tuple[int, ...]


def quotient_graph(a: FiniteGroupAction) -> tuple[Graph, Projection]:
    """Quotient X = Y/G of an edge-free action.

    Orbits are represented by their least member.  The quotient is laid out
    canonically: edges (ordered by least representative) take ids 2i, 2i+1
    and legs follow; an edge flipped by some element becomes a leg.
    """
    cls = classify_action(a)
    if cls is ActionClass.NOT_EDGE_FREE:
        raise NotEdgeFreeError("the action has nontrivial half-edge stabilisers (not edge-free)")
    y = a.graph
    vrep = [min(vertex_orbit(a, v)) for v in range(y.n)]
    vreps = sorted(set(vrep))
    vid = {r: i for i, r in enumerate(vreps)}
    hrep = [min(orbit(a, h)) for h in range(y.k)]
    hreps = sorted(set(hrep))

    edges, legs = [], []
    done = set()
    for r in hreps:
        if r in done:
            continue
        rb = hrep[y.involution[r]]
        done |= {r, rb}
        if rb == r:
            legs.append(r)
        else:
            edges.append((r, rb))
    hid: dict[int, int] = {}
    root, invol, labels = [], [], []
    for i, (r, rb) in enumerate(edges):
        hid[r], hid[rb] = 2 * i, 2 * i + 1
        root += [vid[vrep[y.root[r]]], vid[vrep[y.root[rb]]]]
        invol += [2 * i + 1, 2 * i]
        labels += [f"[{y.half_edge_labels[r]}]", f"[{y.half_edge_labels[rb]}]"]
    for j, r in enumerate(legs):
        h = 2 * len(edges) + j
        hid[r] = h
        root.append(vid[vrep[y.root[r]]])
        invol.append(h)
        labels.append(f"[{y.half_edge_labels[r]}]")
    try:
        x = Graph(tuple(root), tuple(invol), tuple(y.vertex_labels[r] for r in vreps), tuple(labels))
    except GraphValidationError as exc:  # pragma: no cover - quotients of connected graphs are connected
        raise AssertionError(str(exc))
    proj = Projection(tuple(vid[vrep[v]] for v in range(y.n)), tuple(hid[hrep[h]] for h in range(y.k)))
    return x, proj
