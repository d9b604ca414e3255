"""The worked K4 examples, loaded from the bundled data files."""

from __future__ import annotations

from . import io
from .covering import quotient_graph_of_groups
from .graph import Graph

K4_SUBGROUPS = ("c22", "c3", "v4", "c4", "a4")

# reciprocal zeta of each quotient, as listed factor strings
K4_QUOTIENT_ZETA = {
    "c22": "(1+u)^2 (1-u) (1-2u) (1+u+2u^2)",
    "c3": "(1-u) (1-2u) (1+u+2u^2)",
    "v4": "(1+u)^2 (1-2u)",
    "c4": "(1+u) (1-u) (1-2u)",
    "a4": "1-2u",
}


def k4() -> Graph:
    return io.load_graph("k4")


def k4_action(name: str):
    return io.load_action(k4(), name)


def k4_covering(name: str, tree_seed=None, choice_seed=None):
    return quotient_graph_of_groups(k4_action(name), tree_seed, choice_seed)[1]


def k4_irreps(c) -> list:
    """Irreducible representations for a K4 covering: bundled files for C3 and A4, characters otherwise."""
    from .lfunction import one_dimensional_characters

    order = c.action.order
    if order == 3:
        names = ["c3_trivial", "c3_rho", "c3_rho2"]
    elif order == 12:
        names = ["a4_trivial", "a4_rho", "a4_rho2", "a4_sigma"]
    else:
        return one_dimensional_characters(c.action)
    return [io.load_representation(c.action, n) for n in names]
