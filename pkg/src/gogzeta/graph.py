"""Graphs with legs as half-edge structures, paths, and brute-force prime enumeration."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Mapping, Sequence

import numpy as np

ENUMERATION_BITS = 40


class GraphValidationError(ValueError):
    pass


class EnumerationTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class Graph:
    """A connected graph with legs.

    ``root[h]`` is the vertex of half-edge ``h`` and ``involution[h]`` its
    partner; fixed points of the involution are legs.
    """

    root: tuple[int, ...]
    involution: tuple[int, ...]
    vertex_labels: tuple[str, ...]
    half_edge_labels: tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        object.__setattr__(self, "root", tuple(int(x) for x in self.root))
        object.__setattr__(self, "involution", tuple(int(x) for x in self.involution))
        object.__setattr__(self, "vertex_labels", tuple(str(x) for x in self.vertex_labels))
        n, k = len(self.vertex_labels), len(self.root)
        if n == 0:
            raise GraphValidationError("graph needs at least one vertex")
        if len(self.involution) != k:
            raise GraphValidationError("root and involution must have the same length")
        if len(set(self.vertex_labels)) != n:
            raise GraphValidationError("vertex labels must be distinct")
        for h, v in enumerate(self.root):
            if not 0 <= v < n:
                raise GraphValidationError(f"half-edge {h} has dangling root {v}")
        for h, hb in enumerate(self.involution):
            if not 0 <= hb < k or self.involution[hb] != h:
                raise GraphValidationError(f"involution is not self-inverse at half-edge {h}")
        if not self.half_edge_labels:
            object.__setattr__(self, "half_edge_labels", tuple(f"h{h}" for h in range(k)))
        elif len(self.half_edge_labels) != k:
            raise GraphValidationError("need one label per half-edge")
        if not self._connected():
            raise GraphValidationError("graph is disconnected")

    def _connected(self) -> bool:
        seen = {0}
        todo = [0]
        while todo:
            v = todo.pop()
            for h in self.out[v]:
                w = self.terminal(h)
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == self.n

    @property
    def n(self) -> int:
        return len(self.vertex_labels)

    @property
    def k(self) -> int:
        return len(self.root)

    @cached_property
    def out(self) -> tuple[tuple[int, ...], ...]:
        """Half-edges rooted at each vertex, in increasing id order."""
        buckets: list[list[int]] = [[] for _ in range(self.n)]
        for h, v in enumerate(self.root):
            buckets[v].append(h)
        return tuple(tuple(b) for b in buckets)

    def terminal(self, h: int) -> int:
        return self.root[self.involution[h]]

    def is_leg(self, h: int) -> bool:
        return self.involution[h] == h

    @cached_property
    def legs(self) -> tuple[int, ...]:
        return tuple(h for h in range(self.k) if self.involution[h] == h)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as (h, hbar) with h < hbar."""
        return tuple((h, hb) for h, hb in enumerate(self.involution) if h < hb)

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def l(self) -> int:
        return len(self.legs)

    @property
    def b1(self) -> int:
        return self.m - self.n + 1

    def valency(self, v: int) -> int:
        return len(self.out[v])

    def vertex_index(self, label) -> int:
        return self.vertex_labels.index(str(label))

    def is_canonical_layout(self) -> bool:
        """Edges occupy ids (2i, 2i+1) in order, legs follow."""
        m = self.m
        for i in range(m):
            if self.involution[2 * i] != 2 * i + 1:
                return False
        return all(self.involution[h] == h for h in range(2 * m, self.k))


def build_graph(description: Mapping) -> Graph:
    """Build a graph from ``{"vertices": [...], "edges": [[u, v], ...], "legs": [u, ...]}``.

    Edge ``i`` gets half-edges ``2i`` (rooted at its first endpoint) and
    ``2i+1``; legs follow all edges in listing order.
    """
    try:
        vertices = [str(v) for v in description["vertices"]]
    except KeyError:
        raise GraphValidationError("description has no 'vertices'") from None
    index = {v: i for i, v in enumerate(vertices)}
    if len(index) != len(vertices):
        raise GraphValidationError("duplicate vertex label")
    edges = description.get("edges", [])
    legs = description.get("legs", [])
    root: list[int] = []
    inv: list[int] = []
    labels: list[str] = []

    def lookup(v, where):
        try:
            return index[str(v)]
        except KeyError:
            raise GraphValidationError(f"{where} refers to unknown vertex {v!r}") from None

    for i, e in enumerate(edges):
        if len(e) != 2:
            raise GraphValidationError(f"edge {i} must have two endpoints")
        a, b = lookup(e[0], f"edge {i}"), lookup(e[1], f"edge {i}")
        root += [a, b]
        inv += [2 * i + 1, 2 * i]
        labels += [f"e{i}", f"~e{i}"]
    base = 2 * len(edges)
    for j, v in enumerate(legs):
        root.append(lookup(v, f"leg {j}"))
        inv.append(base + j)
        labels.append(f"l{j}")
    return Graph(tuple(root), tuple(inv), tuple(vertices), tuple(labels))


def to_description(g: Graph) -> dict:
    if not g.is_canonical_layout():
        raise ValueError("graph half-edges are not in canonical layout; relabel first")
    lab = g.vertex_labels
    return {
        "vertices": list(lab),
        "edges": [[lab[g.root[h]], lab[g.root[hb]]] for h, hb in g.edges],
        "legs": [lab[g.root[h]] for h in g.legs],
    }


def adjacency_matrix(g: Graph) -> np.ndarray:
    """A[u, v] = #{h : root(h) = u, root(hbar) = v}; loops count twice, legs once."""
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for h in range(g.k):
        a[g.root[h], g.terminal(h)] += 1
    return a


def valency_matrix(g: Graph) -> np.ndarray:
    return np.diag([g.valency(v) for v in range(g.n)]).astype(np.int64)


# -- paths --------------------------------------------------------------------

def is_path(g: Graph, hs: Sequence[int]) -> bool:
    if not hs:
        return False
    return all(g.root[hs[j + 1]] == g.terminal(hs[j]) for j in range(len(hs) - 1))


def is_closed(g: Graph, hs: Sequence[int]) -> bool:
    return is_path(g, hs) and g.terminal(hs[-1]) == g.root[hs[0]]


def is_reduced(g: Graph, hs: Sequence[int], cyclic: bool = True) -> bool:
    """No backtrack ``h_{j+1} = hbar_j``; closed paths are read cyclically (no tail)."""
    n = len(hs)
    last = n if cyclic else n - 1
    return all(hs[(j + 1) % n] != g.involution[hs[j]] for j in range(last))


def minimal_period(seq: Sequence) -> int:
    n = len(seq)
    for p in range(1, n + 1):
        if n % p == 0 and all(seq[i] == seq[i % p] for i in range(n)):
            return p
    return n


def canonical_rotation(seq: Sequence) -> tuple:
    seq = tuple(seq)
    return min(seq[i:] + seq[:i] for i in range(len(seq)))


def vertex_sequence(g: Graph, hs: Sequence[int]) -> tuple[int, ...]:
    """Vertices v_0 .. v_{n-1} (the terminal vertex is omitted)."""
    return tuple(g.root[h] for h in hs)


def vertex_word(g: Graph, hs: Sequence[int]) -> str:
    """Name a closed path by its least rotation of vertex labels, e.g. ``"1342"``."""
    labels = [g.vertex_labels[v] for v in vertex_sequence(g, hs)]
    word = canonical_rotation(labels)
    sep = "" if all(len(x) == 1 for x in g.vertex_labels) else " "
    return sep.join(word)


@dataclass(frozen=True, order=True)
class GraphPrime:
    """Prime of a graph: canonical (least) rotation of a primitive closed reduced path."""

    length: int
    half_edges: tuple[int, ...]

    @classmethod
    def from_path(cls, hs: Sequence[int]) -> "GraphPrime":
        rep = canonical_rotation(hs)
        return cls(len(rep), rep)

    def reversed(self, g: Graph) -> "GraphPrime":
        return GraphPrime.from_path(tuple(g.involution[h] for h in reversed(self.half_edges)))


def check_enumeration(n: int, branching: float, allow_big: bool = False) -> None:
    if allow_big or branching <= 1:
        return
    bits = n * math.log2(branching)
    if bits > ENUMERATION_BITS:
        raise EnumerationTooLarge(
            f"enumerating length {n} with branching {branching} is ~2^{bits:.0f} paths; "
            "pass allow_big=True to force it"
        )


def _graph_branching(g: Graph) -> int:
    return max(g.valency(v) for v in range(g.n))


def _closed_reduced_paths(g: Graph, n: int, first_min: bool = False) -> Iterator[tuple[int, ...]]:
    """All closed cyclically reduced paths of length n.

    With ``first_min`` only paths whose first half-edge is their least one are
    produced (every canonical rotation has this form).
    """
    inv, root, out = g.involution, g.root, g.out
    path: list[int] = []

    def extend(depth: int):
        last = path[-1]
        if depth == n:
            if root[path[0]] == root[inv[last]] and path[0] != inv[last]:
                yield tuple(path)
            return
        back = inv[last]
        for h in out[root[back]]:
            if h == back or (first_min and h < path[0]):
                continue
            path.append(h)
            yield from extend(depth + 1)
            path.pop()

    for h1 in range(g.k):
        path.append(h1)
        yield from extend(1)
        path.pop()


def enumerate_closed_reduced_paths(g: Graph, n: int, allow_big: bool = False) -> int:
    """Count closed reduced paths of length n by depth-first enumeration."""
    if n < 1:
        raise ValueError("n must be positive")
    check_enumeration(n, _graph_branching(g), allow_big)
    return sum(1 for _ in _closed_reduced_paths(g, n))


def enumerate_primes(g: Graph, max_len: int, allow_big: bool = False) -> list[GraphPrime]:
    """All primes of length <= max_len, sorted by (length, representative)."""
    if max_len < 1:
        raise ValueError("max_len must be positive")
    check_enumeration(max_len, _graph_branching(g), allow_big)
    primes = []
    for n in range(1, max_len + 1):
        for p in _closed_reduced_paths(g, n, first_min=True):
            if minimal_period(p) == n and canonical_rotation(p) == p:
                primes.append(GraphPrime(n, p))
    return sorted(primes)


def bfs_order(g: Graph, start: int = 0) -> list[int]:
    seen = [False] * g.n
    seen[start] = True
    order = [start]
    q = deque([start])
    while q:
        v = q.popleft()
        for h in g.out[v]:
            w = g.terminal(h)
            if not seen[w]:
                seen[w] = True
                order.append(w)
                q.append(w)
    return order
