from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gogzeta.poly import (
    ComplexPolynomial,
    DimensionError,
    NotInvertibleError,
    PolyMatrix,
    Polynomial,
    RoundingError,
    compact,
    det_complex,
    det_int,
    divides,
    euler_product_truncation,
    from_text,
    round_to_int_poly,
    series_reciprocal,
    to_text,
)

P = Polynomial


def test_canonical_zero_and_degree():
    assert P((0, 0)).coeffs == ()
    assert P(()).degree == -1
    assert P((1, 2, 0)).degree == 1


def test_det_small_cases():
    assert det_int(PolyMatrix(0, 0, ())) == P((1,))
    m = PolyMatrix.from_rows([[P((1, -1)), 0], [0, P((1, 1))]])
    assert det_int(m) == P((1, 0, -1))
    m = PolyMatrix.from_rows([[P((1, 0, 1)), P((0, -2))], [P((0, -2)), P((1, 0, 1))]])
    assert det_int(m) == P((1, 0, -2, 0, 1))


def test_det_needs_square():
    with pytest.raises(DimensionError):
        det_int(PolyMatrix.from_rows([[1, 2]]))
    with pytest.raises(DimensionError):
        det_complex(PolyMatrix.from_rows([[ComplexPolynomial((1,)), ComplexPolynomial((2,))]]))


def test_det_complex_cube_roots():
    z = np.exp(2j * np.pi / 3)
    m = PolyMatrix.from_rows([[ComplexPolynomial((1,)), ComplexPolynomial((0, z))],
                              [ComplexPolynomial((0, z * z)), ComplexPolynomial((1,))]])
    assert round_to_int_poly(det_complex(m)) == P((1, 0, -1))
    one = PolyMatrix.from_rows([[ComplexPolynomial((1, -2))]])
    assert round_to_int_poly(det_complex(one)) == P((1, -2))


def test_series_reciprocal():
    assert series_reciprocal(P((1, -1)), 3) == [1, 1, 1, 1]
    assert series_reciprocal(P((1, -2)), 3) == [1, 2, 4, 8]
    with pytest.raises(NotInvertibleError):
        series_reciprocal(P((0, 1)), 3)
    half = series_reciprocal(P((2, 1)), 2)
    assert half == [Fraction(1, 2), Fraction(-1, 4), Fraction(1, 8)]


def test_euler_product_truncation():
    assert euler_product_truncation([2], 5) == [1, 0, 1, 0, 1, 0]
    assert euler_product_truncation([1, 1], 3) == [1, 2, 3, 4]
    assert euler_product_truncation([], 3) == [1, 0, 0, 0]


def test_divides():
    assert divides(P((1, -1)), P((1, 0, -1))) == P((1, 1))
    assert divides(P((1, 1)), P((1, 0, 1))) is None
    with pytest.raises(ZeroDivisionError):
        divides(P(()), P((1,)))


def test_rounding_reports_worst_coefficient():
    with pytest.raises(RoundingError) as exc:
        round_to_int_poly(ComplexPolynomial((1.0, 0.3, 2.0 + 0.1j)), 1e-6)
    assert exc.value.index == 1


def test_text_forms_round_trip():
    p = P((1, -2, 0, 4))
    assert to_text(p) == "1 - 2*u + 4*u^3"
    assert compact(p) == "1-2u+4u^3"
    assert from_text(to_text(p)) == p
    assert from_text(compact(p)) == p
    assert from_text("0") == P(())


small = st.integers(-3, 3)


@st.composite
def int_matrices(draw, n=None):
    n = draw(st.integers(1, 6)) if n is None else n
    return [[P(tuple(draw(st.lists(small, min_size=0, max_size=3)))) for _ in range(n)] for _ in range(n)]


@settings(max_examples=40, deadline=None)
@given(int_matrices())
def test_bareiss_agrees_with_interpolation(rows):
    exact = det_int(PolyMatrix.from_rows(rows))
    cplx = det_complex(PolyMatrix.from_rows([[e.to_complex() for e in r] for r in rows]))
    assert cplx.max_abs_diff(exact.to_complex()) <= 1e-6 * max(1, max((abs(c) for c in exact.coeffs), default=1))


@settings(max_examples=30, deadline=None)
@given(int_matrices(3), int_matrices(2), int_matrices(2))
def test_block_triangular_det(a, b, off):
    zero = P(())
    rows = [a[i] + [zero, zero] for i in range(3)]
    rows += [off[i] + [off[i][0]] + b[i] for i in range(2)]
    assert det_int(PolyMatrix.from_rows(rows)) == det_int(PolyMatrix.from_rows(a)) * det_int(PolyMatrix.from_rows(b))


@given(st.lists(small, min_size=1, max_size=6), st.integers(0, 10))
def test_series_times_polynomial_is_one(tail, order):
    p = P((1,) + tuple(tail))
    s = series_reciprocal(p, order)
    prod = [sum(p[i] * s[k - i] for i in range(k + 1)) for k in range(order + 1)]
    assert prod == [1] + [0] * order


@given(st.lists(small, min_size=1, max_size=5), st.lists(small, min_size=1, max_size=5))
def test_divides_remultiplies(a, q):
    a, q = P(tuple(a)), P(tuple(q))
    if a.is_zero():
        return
    got = divides(a, a * q)
    assert got is not None and a * got == a * q
