"""JSON file formats for graphs, graphs of groups, actions, coverings and representations."""

from __future__ import annotations

import cmath
import json
import re
from importlib import resources
from pathlib import Path
from typing import Any, Mapping

import numpy as np

from .action import (
    FiniteGroupAction,
    GraphAutomorphism,
    automorphism_from_vertex_perm,
    cycle_string,
    generate_group,
    parse_cycles,
    validate_automorphism,
)
from .covering import CoveringData, quotient_graph_of_groups
from .gog import GraphOfGroups
from .graph import Graph, build_graph, to_description
from .lfunction import Representation, from_generators


class InputError(ValueError):
    pass


DATA_DIR = "data"


def resolve(name: str | Path) -> Path:
    """A path as given, else a bundled example of that name (``.json`` optional)."""
    p = Path(name)
    if p.exists():
        return p
    base = resources.files("gogzeta") / DATA_DIR
    for cand in (str(name), f"{name}.json"):
        q = base / cand
        if q.is_file():
            return Path(str(q))
    raise InputError(f"{name}: no such file (and no bundled example of that name)")


def read_json(name: str | Path) -> Any:
    path = resolve(name)
    text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _wrap(path, fn, *args):
    try:
        return fn(*args)
    except InputError:
        raise
    except (ValueError, KeyError, TypeError, IndexError) as exc:
        raise InputError(f"{path}: {exc}") from None


# -- graphs ------------------------------------------------------------------------

def graph_from_dict(d: Mapping) -> Graph:
    """Either the vertices/edges/legs description or an explicit root/involution form."""
    if "root" in d:
        return Graph(tuple(d["root"]), tuple(d["involution"]), tuple(d["vertices"]),
                     tuple(d.get("half_edge_labels", ())))
    return build_graph(d)


def graph_to_dict(g: Graph) -> dict:
    if g.is_canonical_layout():
        return to_description(g)
    return {
        "vertices": list(g.vertex_labels),
        "root": list(g.root),
        "involution": list(g.involution),
        "half_edge_labels": list(g.half_edge_labels),
    }


def load_graph(name) -> Graph:
    return _wrap(name, graph_from_dict, read_json(name))


# -- graphs of groups --------------------------------------------------------------------

def gog_from_dict(d: Mapping) -> GraphOfGroups:
    g = graph_from_dict(d)
    raw = d.get("charges", {})
    unknown = set(raw) - set(g.vertex_labels)
    if unknown:
        raise InputError(f"charges for unknown vertices {sorted(unknown)}")
    return GraphOfGroups.from_charges(g, [int(raw.get(v, 1)) for v in g.vertex_labels])


def gog_to_dict(x: GraphOfGroups) -> dict:
    d = graph_to_dict(x.graph)
    d["charges"] = {v: c for v, c in zip(x.graph.vertex_labels, x.charges)}
    if x.action is not None:
        d["stabilizers"] = {
            v: [x.action.names[e] for e in grp] for v, grp in zip(x.graph.vertex_labels, x.vertex_groups)
        }
    return d


def load_gog(name) -> GraphOfGroups:
    return _wrap(name, gog_from_dict, read_json(name))


# -- actions ----------------------------------------------------------------------------

def _half_edge_perm(g: Graph, spec) -> tuple[int, ...]:
    if isinstance(spec, list):
        return tuple(int(x) for x in spec)
    if isinstance(spec, dict):
        idx = {lab: i for i, lab in enumerate(g.half_edge_labels)}
        perm = list(range(g.k))
        for a, b in spec.items():
            perm[idx[a] if a in idx else int(a)] = idx[b] if b in idx else int(b)
        return tuple(perm)
    if isinstance(spec, str):
        return parse_cycles(spec, g.half_edge_labels)
    raise InputError(f"cannot read half-edge map {spec!r}")


def automorphism_from_dict(g: Graph, d: Mapping) -> GraphAutomorphism:
    vperm = parse_cycles(d.get("vertices", ""), g.vertex_labels)
    if d.get("half_edges") is None:
        return automorphism_from_vertex_perm(g, vperm)
    a = GraphAutomorphism(vperm, _half_edge_perm(g, d["half_edges"]))
    validate_automorphism(g, a)
    return a


def action_from_dict(g: Graph, d: Mapping) -> FiniteGroupAction:
    gens = [automorphism_from_dict(g, x) for x in d.get("generators", [])]
    return generate_group(g, gens, int(d.get("max_order", 5000)))


def action_to_dict(a: FiniteGroupAction) -> dict:
    g = a.graph
    return {
        "generators": [
            {
                "vertices": cycle_string(a.elements[s].vertex_perm, g.vertex_labels),
                "half_edges": list(a.elements[s].half_edge_perm),
            }
            for s in a.generators
        ]
    }


def load_action(graph: Graph, name) -> FiniteGroupAction:
    return _wrap(name, action_from_dict, graph, read_json(name))


# -- coverings ----------------------------------------------------------------------------

def covering_to_dict(c: CoveringData) -> dict:
    x, a = c.graph_x, c.action
    xl, yl = x.half_edge_labels, c.graph_y.half_edge_labels
    return {
        "graph": graph_to_dict(c.graph_y),
        "action": action_to_dict(a),
        "tree_seed": c.tree_seed,
        "choice_seed": c.choice_seed,
        "quotient": gog_to_dict(c.quotient),
        "covering": {
            "tree": sorted(xl[h] for h in c.tree_x),
            "lift_of_vertex": {x.vertex_labels[v]: c.graph_y.vertex_labels[w] for v, w in enumerate(c.lift_of_vertex)},
            "identity_lift": {xl[h]: yl[f] for h, f in enumerate(c.identity_lift)},
            "frobenius": {xl[h]: a.names[g] for h, g in enumerate(c.frobenius)},
            "sheet_number": [a.names[g] for g in c.sheet_number],
        },
    }


def covering_from_dict(d: Mapping) -> CoveringData:
    """Rebuild from graph, action and seeds; stored tables must agree with the rebuild."""
    y = graph_from_dict(d["graph"])
    a = action_from_dict(y, d["action"])
    _, c = quotient_graph_of_groups(a, d.get("tree_seed"), d.get("choice_seed"))
    stored = d.get("covering", {}).get("frobenius")
    if stored is not None:
        mine = covering_to_dict(c)["covering"]["frobenius"]
        if stored != mine:
            raise InputError("stored Frobenius table does not match the rebuilt covering")
    return c


def load_covering(name) -> CoveringData:
    return _wrap(name, covering_from_dict, read_json(name))


# -- representations ---------------------------------------------------------------------

_ROOT = re.compile(r"^(?P<sign>[+-]?)\s*(?:zeta(?P<n>\d+)(?:\^(?P<k>-?\d+))?|(?P<i>i))$")


def parse_entry(x) -> complex:
    """A number, ``{"re": .., "im": ..}``, or a root of unity such as ``"zeta3^2"``, ``"-zeta4"``, ``"i"``."""
    if isinstance(x, bool):
        raise InputError(f"bad matrix entry {x!r}")
    if isinstance(x, (int, float)):
        return complex(x)
    if isinstance(x, dict):
        return complex(float(x.get("re", 0)), float(x.get("im", 0)))
    if isinstance(x, str):
        s = x.strip()
        m = _ROOT.match(s)
        if m:
            sign = -1 if m.group("sign") == "-" else 1
            if m.group("i"):
                return sign * 1j
            n, k = int(m.group("n")), int(m.group("k") or 1)
            return sign * cmath.exp(2j * cmath.pi * k / n)
        try:
            return complex(s.replace(" ", ""))
        except ValueError:
            pass
    raise InputError(f"bad matrix entry {x!r}")


def representation_from_dict(a: FiniteGroupAction, d: Mapping) -> Representation:
    images = {}
    for key, mat in d["generators"].items():
        images[a.element_by_name(key)] = np.array([[parse_entry(e) for e in row] for row in mat])
    rep = from_generators(a, images, d.get("name", "rho"))
    if "dim" in d and int(d["dim"]) != rep.dim:
        raise InputError(f"declared dim {d['dim']} but matrices are {rep.dim}x{rep.dim}")
    return rep


def _entry_out(z: complex):
    z = complex(z)
    if abs(z.imag) < 1e-12:
        r = z.real
        return int(round(r)) if abs(r - round(r)) < 1e-12 else r
    return {"re": z.real, "im": z.imag}


def representation_to_dict(r: Representation) -> dict:
    a = r.group
    gens = a.generators or (0,)
    return {
        "name": r.name,
        "dim": r.dim,
        "generators": {a.names[g]: [[_entry_out(z) for z in row] for row in r(g)] for g in gens},
    }


def load_representation(a: FiniteGroupAction, name) -> Representation:
    return _wrap(name, representation_from_dict, a, read_json(name))
