"""Dense univariate polynomials in ``u`` and determinants of polynomial matrices.

Two coefficient flavours are provided:

* :class:`Polynomial` -- exact coefficients (Python ints; ``Fraction`` is
  tolerated for the weighted-charge extension).  ``IntPolynomial`` is an alias.
* :class:`ComplexPolynomial` -- double precision complex coefficients, used
  wherever representation matrices with roots of unity enter.

Index ``i`` of ``coeffs`` is the coefficient of ``u**i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number
from typing import Iterable, Sequence

import numpy as np

EPS_ZERO = 1e-9
EPS_DET = 1e-6
ROUND_TOL = 1e-6


class DimensionError(ValueError):
    pass


class NotInvertibleError(ZeroDivisionError):
    pass


class RoundingError(ValueError):
    """Raised when a complex polynomial is not within tolerance of an integer one."""

    def __init__(self, index: int, value: complex, tol: float):
        self.index = index
        self.value = value
        self.tol = tol
        super().__init__(
            f"coefficient of u^{index} = {value!r} is not within {tol:g} of an integer"
        )


def _norm_exact(c):
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, (bool, np.bool_)):
        raise TypeError("boolean coefficient")
    if isinstance(c, (int, np.integer)):
        return int(c)
    raise TypeError(f"exact polynomial coefficients must be int or Fraction, got {type(c).__name__}")


def _exact_quo(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError("inexact integer division")
        return q
    return _norm_exact(Fraction(a) / b)


# -- raw list helpers (hot path of Bareiss) ----------------------------------

def _strip(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _strip(out)


def _sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _strip(out)


def _divmod(a: Sequence, b: Sequence):
    """Long division a = b*q + r over the coefficient ring.

    Raises ArithmeticError when a leading-coefficient division is inexact.
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], _strip(r)
    q = [0] * (len(r) - db)
    lead = b[-1]
    for i in range(len(r) - 1 - db, -1, -1):
        c = r[i + db]
        if c == 0:
            continue
        t = _exact_quo(c, lead)
        q[i] = t
        for j, y in enumerate(b):
            r[i + j] -= t * y
    return _strip(q), _strip(r[:db])


def _exact_div(a: Sequence, b: Sequence) -> list:
    q, r = _divmod(a, b)
    if r:
        raise ArithmeticError("polynomial division is not exact")
    return q


# -- exact polynomials --------------------------------------------------------

@dataclass(frozen=True)
class Polynomial:
    """Exact polynomial; canonical form has no trailing zeros (zero is ``()``)."""

    coeffs: tuple = ()

    def __post_init__(self):
        c = [_norm_exact(x) for x in self.coeffs]
        object.__setattr__(self, "coeffs", tuple(_strip(c)))

    @classmethod
    def const(cls, c) -> "Polynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, c, power: int) -> "Polynomial":
        return cls((0,) * power + (c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction, np.integer)):
            return Polynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self), len(other))
        return Polynomial(tuple(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(tuple(_sub(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(tuple(_mul(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, other: "Polynomial"):
        q, r = _divmod(self.coeffs, other.coeffs)
        return Polynomial(tuple(q)), Polynomial(tuple(r))

    def to_complex(self) -> "ComplexPolynomial":
        return ComplexPolynomial(tuple(complex(c) for c in self.coeffs))

    def to_list(self) -> list:
        return [c if isinstance(c, int) else str(c) for c in self.coeffs]

    def to_text(self) -> str:
        return to_text(self)

    def compact(self) -> str:
        return compact(self)

    def __str__(self) -> str:
        return to_text(self)


IntPolynomial = Polynomial

ONE = Polynomial((1,))
ZERO = Polynomial(())
U = Polynomial((0, 1))


# -- complex polynomials -----------------------------------------------------

def _negligible(z: complex, eps: float = EPS_ZERO) -> bool:
    return abs(z.real) < eps and abs(z.imag) < eps


@dataclass(frozen=True)
class ComplexPolynomial:
    """Floating point complex polynomial; trailing negligible coefficients are stripped."""

    coeffs: tuple = ()

    def __post_init__(self):
        c = [complex(x) for x in self.coeffs]
        while c and _negligible(c[-1]):
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> complex:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0j

    def __len__(self) -> int:
        return len(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, ComplexPolynomial):
            return other
        if isinstance(other, Polynomial):
            return other.to_complex()
        if isinstance(other, Number):
            return ComplexPolynomial((complex(other),))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self), len(other))
        return ComplexPolynomial(tuple(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return ComplexPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return ComplexPolynomial(())
        return ComplexPolynomial(tuple(np.convolve(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = ComplexPolynomial((1,))
        for _ in range(e):
            result = result * self
        return result

    def __call__(self, x):
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, other: "ComplexPolynomial"):
        other = self._coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        if len(r) - 1 < db:
            return ComplexPolynomial(()), ComplexPolynomial(tuple(r))
        q = [0j] * (len(r) - db)
        for i in range(len(r) - 1 - db, -1, -1):
            t = r[i + db] / b[-1]
            q[i] = t
            for j, y in enumerate(b):
                r[i + j] -= t * y
        return ComplexPolynomial(tuple(q)), ComplexPolynomial(tuple(r[:db]))

    def max_abs_diff(self, other) -> float:
        other = self._coerce(other)
        n = max(len(self), len(other))
        return max((abs(self[i] - other[i]) for i in range(n)), default=0.0)

    def to_list(self) -> list:
        return [{"re": c.real, "im": c.imag} for c in self.coeffs]


def _as_complex(e) -> ComplexPolynomial:
    if isinstance(e, ComplexPolynomial):
        return e
    if isinstance(e, Polynomial):
        return e.to_complex()
    return ComplexPolynomial((complex(e),))


def round_to_int_poly(p: ComplexPolynomial, tol: float = ROUND_TOL) -> Polynomial:
    """Round to an integer polynomial, or raise :class:`RoundingError` with the worst coefficient."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    worst, worst_err = None, -1.0
    out = []
    for i, c in enumerate(p.coeffs):
        r = round(c.real)
        err = max(abs(c.real - r), abs(c.imag))
        if err > worst_err:
            worst, worst_err = i, err
        out.append(r)
    if worst_err > tol:
        raise RoundingError(worst, p.coeffs[worst], tol)
    return Polynomial(tuple(out))


def rounding_residual(p: ComplexPolynomial) -> float:
    """Largest distance of a coefficient from the nearest real integer."""
    return max((max(abs(c.real - round(c.real)), abs(c.imag)) for c in p.coeffs), default=0.0)


# -- polynomial matrices -----------------------------------------------------

@dataclass(frozen=True)
class PolyMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows * self.cols != len(self.entries):
            raise DimensionError(f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries")
        kinds = {type(e) for e in self.entries}
        if len(kinds) > 1:
            raise TypeError("PolyMatrix entries must share one polynomial flavour")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "PolyMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise DimensionError("ragged rows")
        flat = [e for r in rows for e in r]
        if any(isinstance(e, ComplexPolynomial) for e in flat):
            flat = [_as_complex(e) for e in flat]
        else:
            flat = [e if isinstance(e, Polynomial) else Polynomial((e,)) for e in flat]
        return cls(len(rows), ncols, tuple(flat))

    @classmethod
    def pencil(cls, *coefficient_matrices) -> "PolyMatrix":
        """Build M0 + M1*u + M2*u^2 + ... from equally shaped scalar matrices."""
        mats = [np.asarray(m) for m in coefficient_matrices]
        shape = mats[0].shape
        if any(m.shape != shape for m in mats):
            raise DimensionError("pencil coefficients must share a shape")
        r, c = shape
        is_complex = any(np.iscomplexobj(m) for m in mats)
        entries = []
        for i in range(r):
            for j in range(c):
                cs = [m[i, j] for m in mats]
                if is_complex:
                    entries.append(ComplexPolynomial(tuple(complex(x) for x in cs)))
                else:
                    entries.append(Polynomial(tuple(int(x) for x in cs)))
        return cls(r, c, tuple(entries))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row_list(self) -> list[list]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    @property
    def is_complex(self) -> bool:
        return bool(self.entries) and isinstance(self.entries[0], ComplexPolynomial)


def det_int(m: PolyMatrix) -> Polynomial:
    """Exact determinant by fraction-free (Bareiss) elimination over Z[u]."""
    if m.rows != m.cols:
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    if m.is_complex:
        raise TypeError("det_int needs exact entries")
    n = m.rows
    if n == 0:
        return ONE
    a = [[list(e.coeffs) for e in row] for row in m.row_list()]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not a[k][k]:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return ZERO
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = _sub(_mul(akk, row_i[j]), _mul(aik, row_k[j]))
                row_i[j] = _exact_div(num, prev) if num else []
        prev = akk
    det = Polynomial(tuple(a[n - 1][n - 1]))
    return det if sign > 0 else -det


def _coefficient_stack(m: PolyMatrix) -> tuple[np.ndarray, int]:
    """Return (stack of coefficient matrices, degree bound D = sum of row max degrees)."""
    n = m.rows
    maxdeg = max((e.degree for e in m.entries), default=0)
    maxdeg = max(maxdeg, 0)
    stack = np.zeros((maxdeg + 1, n, n), dtype=complex)
    bound = 0
    for i in range(n):
        row_deg = 0
        for j in range(n):
            e = m[i, j]
            for p, c in enumerate(e.coeffs):
                stack[p, i, j] = complex(c)
            row_deg = max(row_deg, e.degree)
        bound += row_deg
    return stack, bound


def det_complex(m: PolyMatrix) -> ComplexPolynomial:
    """Determinant by evaluation at the (D+1)-th roots of unity and interpolation.

    Each sample determinant is an LU factorisation with partial pivoting
    (``numpy.linalg.det``); the interpolation is the explicit inverse
    Vandermonde transform, which is unitary up to scale on the unit circle.
    """
    if m.rows != m.cols:
        raise DimensionError(f"determinant of non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return ComplexPolynomial((1,))
    stack, bound = _coefficient_stack(m)
    npts = bound + 1
    nodes = np.exp(2j * np.pi * np.arange(npts) / npts)
    powers = nodes[:, None] ** np.arange(stack.shape[0])[None, :]
    samples = np.einsum("sp,pij->sij", powers, stack)
    values = np.linalg.det(samples)
    vander_inv = np.conj(nodes[None, :] ** np.arange(npts)[:, None]) / npts
    coeffs = vander_inv @ values
    return ComplexPolynomial(tuple(coeffs))


# -- power series ------------------------------------------------------------

def series_reciprocal(p, order: int) -> list:
    """Coefficients of 1/p through u^order.

    Exact ``Fraction`` values for a :class:`Polynomial`, complex floats for a
    :class:`ComplexPolynomial`.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    if isinstance(p, ComplexPolynomial):
        c0 = p[0]
        if _negligible(c0):
            raise NotInvertibleError("constant term is zero")
        out = [1 / c0]
        for k in range(1, order + 1):
            s = sum(p[i] * out[k - i] for i in range(1, min(k, p.degree) + 1))
            out.append(-s / c0)
        return out
    c0 = p[0]
    if c0 == 0:
        raise NotInvertibleError("constant term is zero")
    inv0 = Fraction(1) / c0
    out = [inv0]
    for k in range(1, order + 1):
        s = sum((p[i] * out[k - i] for i in range(1, min(k, p.degree) + 1)), Fraction(0))
        out.append(-s * inv0)
    return out


def series_mul(a: Sequence, b: Sequence, order: int) -> list:
    out = []
    for k in range(order + 1):
        out.append(sum(a[i] * b[k - i] for i in range(k + 1) if i < len(a) and k - i < len(b)))
    return out


def euler_product_truncation(prime_lengths: Iterable[int], order: int) -> list[Fraction]:
    """Coefficients through u^order of prod (1 - u^l)^-1 over the multiset of lengths."""
    s = [Fraction(0)] * (order + 1)
    s[0] = Fraction(1)
    for ell in prime_lengths:
        if ell < 1:
            raise ValueError("prime lengths must be positive")
        for i in range(ell, order + 1):
            s[i] += s[i - ell]
    return s


def divides(a: Polynomial, b: Polynomial) -> Polynomial | None:
    """Return q with b == a*q exactly over Z, or None if a does not divide b."""
    if a.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    try:
        q, r = b.divmod(a)
    except ArithmeticError:
        return None
    if not r.is_zero():
        return None
    if a * q != b:  # re-multiplication check in exact arithmetic
        return None
    return q


def exact_quotient(b: Polynomial, a: Polynomial) -> Polynomial:
    q = divides(a, b)
    if q is None:
        raise ArithmeticError(f"{compact(a)} does not divide {compact(b)}")
    return q


def complex_exact_quotient(b: ComplexPolynomial, a: ComplexPolynomial, tol: float = EPS_DET) -> ComplexPolynomial:
    q, r = b.divmod(a)
    scale = max(1.0, max((abs(c) for c in b.coeffs), default=1.0))
    if any(abs(c) > tol * scale for c in r.coeffs):
        raise ArithmeticError("complex polynomial division leaves a remainder")
    return q


# -- text forms --------------------------------------------------------------

def to_text(p: Polynomial) -> str:
    """Serialisation form ``c0 + c1*u + c2*u^2``; zero terms are omitted."""
    terms = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else ("u" if i == 1 else f"u^{i}")
        body = str(abs(c)) if i == 0 else f"{abs(c)}*{mono}"
        if not terms:
            terms.append(("-" if c < 0 else "") + body)
        else:
            terms.append(("- " if c < 0 else "+ ") + body)
    return " ".join(terms) if terms else "0"


_TERM = re.compile(r"^(?P<c>\d+(?:/\d+)?)?(?:\*?u(?:\^(?P<e>\d+))?)?$")


def from_text(text: str) -> Polynomial:
    """Parse the forms produced by :func:`to_text` and :func:`compact`."""
    s = text.replace(" ", "")
    if s in ("", "0"):
        return ZERO
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, Fraction] = {}
    for sign, body in re.findall(r"([+-])([^+-]+)", s):
        m = _TERM.match(body)
        if not m or body == "":
            raise ValueError(f"cannot parse polynomial term {body!r} in {text!r}")
        has_u = "u" in body
        c = Fraction(m.group("c")) if m.group("c") else Fraction(1)
        e = int(m.group("e")) if m.group("e") else (1 if has_u else 0)
        coeffs[e] = coeffs.get(e, Fraction(0)) + (c if sign == "+" else -c)
    top = max(coeffs)
    return Polynomial(tuple(coeffs.get(i, 0) for i in range(top + 1)))


def compact(p: Polynomial) -> str:
    """Human form such as ``1+u+2u^2`` or ``1-2u``."""
    out = ""
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else ("u" if i == 1 else f"u^{i}")
        mag = abs(c)
        body = f"{mag}" if i == 0 else (mono if mag == 1 else f"{mag}{mono}")
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += ("-" if c < 0 else "+") + body
    return out or "0"


_FACTOR = re.compile(r"\(([^()]*)\)(?:\^(\d+))?|([^\s()]+)")


def from_factored_text(text: str) -> Polynomial:
    """Parse products like ``(1-u^2)^2 (1-2u)`` or a bare ``1-u^2``."""
    acc = ONE
    pos = 0
    s = text.strip()
    while pos < len(s):
        if s[pos].isspace():
            pos += 1
            continue
        m = _FACTOR.match(s, pos)
        if not m:
            raise ValueError(f"cannot parse factor at {s[pos:]!r}")
        if m.group(1) is not None:
            acc = acc * from_text(m.group(1)) ** int(m.group(2) or 1)
        else:
            acc = acc * from_text(m.group(3))
        pos = m.end()
    return acc
