import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from conftest import bouquet, dipole
from gogzeta import examples
from gogzeta.gog import GraphOfGroups, split_leg
from gogzeta.graph import build_graph
from gogzeta.poly import Polynomial, from_factored_text as from_text
from gogzeta.sampling import GogSampler, random_gog
from gogzeta.zeta import (
    LegsNotSupported,
    factor_text,
    factored,
    factored_text,
    three_term_core,
    trace_powers,
    verify_euler,
    zeta_gog_three_term,
    zeta_gog_two_term,
    zeta_graph,
    zeta_inverse,
    zeta_report,
)


def test_bouquets():
    assert zeta_graph(bouquet(1)) == from_text("(1-u)^2")
    assert zeta_graph(bouquet(2)) == from_text("(1-u^2) (1-u) (1-3u)")


def test_negative_exponent_is_divided_out():
    tree = build_graph({"vertices": ["a", "b"], "edges": [["a", "b"]]})
    assert tree.b1 == 0
    assert zeta_graph(tree) == Polynomial((1,))


def test_legs_need_the_gog_formula(two_legs):
    with pytest.raises(LegsNotSupported):
        zeta_graph(two_legs)
    assert zeta_inverse(two_legs) == from_text("1-u^2")


def test_k4(k4):
    assert factored_text(factored(k4)) == "(1-u^2)^2 (1-u) (1-2u) (1+u+2u^2)^3"


@pytest.mark.parametrize("name", examples.K4_SUBGROUPS)
def test_k4_quotients(name):
    x = examples.k4_covering(name).quotient
    assert zeta_gog_two_term(x) == zeta_gog_three_term(x) == from_text(examples.K4_QUOTIENT_ZETA[name])
    assert factored_text(factored(x)) == examples.K4_QUOTIENT_ZETA[name]


def test_rational_charges_match_symbolic():
    g = dipole(2)
    c = [Fraction(1, 2), Fraction(3, 1)]
    u = sympy.Symbol("u")
    a, q = sympy.Matrix([[0, 2], [2, 0]]), sympy.diag(2, 2)
    cm = sympy.diag(*[sympy.Rational(x.numerator, x.denominator) for x in c])
    want = sympy.Poly(sympy.expand((sympy.eye(2) - cm * a * u + (cm * q - sympy.eye(2)) * u**2).det()), u)
    got = three_term_core(g, c)
    assert list(got.coeffs) == [Fraction(int(x.p), int(x.q)) for x in reversed(want.all_coeffs())]


def test_factor_text():
    assert factor_text(from_text("1-u^2")) == "(1-u) (1+u)"
    assert factor_text(Polynomial((3,))) == "3"


def test_report(k4):
    rep = zeta_report(GraphOfGroups.from_charges(k4, [1] * 4), euler=6)
    assert rep["two_term_agrees"] and rep["euler_check"]["ok"]


def test_split_leg_example():
    x = GraphOfGroups.from_charges(build_graph({"vertices": ["v"], "legs": ["v"]}), [1])
    assert zeta_inverse(x) == Polynomial((1,))  # no reduced paths at all
    y = GraphOfGroups.from_charges(build_graph({"vertices": ["v"], "legs": ["v"]}), [2])
    assert zeta_inverse(y) == from_text("1-u")
    assert zeta_inverse(split_leg(y, 0)) == from_text("1-u^2")


gogs = st.integers(0, 10**6).map(lambda s: random_gog(random.Random(s), GogSampler(path_budget=5000, budget_len=8)))


@settings(max_examples=30, deadline=None)
@given(gogs)
def test_two_term_three_term_euler(x):
    zi = zeta_gog_three_term(x)
    assert zeta_gog_two_term(x) == zi
    assert verify_euler(x, 8)["ok"]
    # log derivative: u d/du log zeta = sum tr W^n u^n
    tr = trace_powers(x, 6)
    inv = zeta_gog_two_term(x)
    u = sympy.Symbol("u")
    z = sum(int(c) * u**i for i, c in enumerate(inv.coeffs))
    ser = sympy.series(-u * sympy.diff(z, u) / z, u, 0, 7).removeO()
    assert [int(ser.coeff(u, n)) for n in range(1, 7)] == tr
