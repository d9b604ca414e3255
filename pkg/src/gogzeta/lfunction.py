"""Artin-Ihara L-functions of an edge-free quotient for a representation of the group."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

from .covering import CoveringData, frobenius_of_path
from .gog import enumerate_gog_primes
from .graph import adjacency_matrix, valency_matrix
from .poly import (
    EPS_DET,
    EPS_ZERO,
    ROUND_TOL,
    ComplexPolynomial,
    PolyMatrix,
    Polynomial,
    RoundingError,
    compact,
    complex_exact_quotient,
    det_complex,
    det_int,
    exact_quotient,
    divides,
    round_to_int_poly,
    rounding_residual,
    series_reciprocal,
)
from .zeta import zeta_gog_two_term, zeta_inverse


class RepresentationError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Representation:
    """Matrices rho(g) for every element id of ``group``."""

    group: object = field(repr=False)  # FiniteGroupAction
    dim: int
    matrices: tuple
    name: str = "rho"

    def __post_init__(self):
        mats = tuple(np.asarray(m, dtype=complex) for m in self.matrices)
        object.__setattr__(self, "matrices", mats)
        if len(mats) != self.group.order:
            raise RepresentationError("need one matrix per group element")
        if any(m.shape != (self.dim, self.dim) for m in mats):
            raise RepresentationError(f"matrices must be {self.dim}x{self.dim}")

    def __call__(self, g: int) -> np.ndarray:
        return self.matrices[g]

    def is_integral(self, tol: float = EPS_ZERO) -> bool:
        return all(np.abs(m - np.round(m.real)).max(initial=0) <= tol for m in self.matrices)

    def character(self) -> np.ndarray:
        return np.array([np.trace(m) for m in self.matrices])

    def check(self, tol: float = EPS_ZERO * 1e3) -> None:
        """Homomorphism within tolerance (tol scaled by dim for accumulated rounding)."""
        a = self.group
        eye = np.eye(self.dim)
        if np.abs(self.matrices[0] - eye).max(initial=0) > tol:
            raise RepresentationError(f"{self.name}: identity is not sent to I")
        for x in range(a.order):
            mx = self.matrices[x]
            for y in range(a.order):
                err = np.abs(mx @ self.matrices[y] - self.matrices[a.mul[x][y]]).max(initial=0)
                if err > tol * max(1, self.dim):
                    raise RepresentationError(f"{self.name}: not a homomorphism at ({a.names[x]}, {a.names[y]})")


def from_generators(group, images: Mapping[int, np.ndarray], name: str = "rho", check: bool = True) -> Representation:
    """Extend generator images to the whole group along the multiplication table."""
    if not images:
        raise RepresentationError("no generator images given")
    mats = {int(g): np.asarray(m, dtype=complex) for g, m in images.items()}
    dim = next(iter(mats.values())).shape[0]
    full: list[np.ndarray | None] = [None] * group.order
    full[0] = np.eye(dim, dtype=complex)
    q = deque([0])
    while q:
        x = q.popleft()
        for s, ms in mats.items():
            y = group.mul[s][x]
            if full[y] is None:
                full[y] = ms @ full[x]
                q.append(y)
    if any(m is None for m in full):
        raise RepresentationError("the given elements do not generate the group")
    rep = Representation(group, dim, tuple(full), name)
    if check:
        rep.check()
    return rep


def trivial_rep(group) -> Representation:
    return Representation(group, 1, tuple(np.ones((1, 1)) for _ in range(group.order)), "trivial")


def regular_rep(group) -> Representation:
    """Right regular representation: rho(g)[x, y] = 1 iff y = x g."""
    d = group.order
    mats = []
    for g in range(d):
        m = np.zeros((d, d))
        for x in range(d):
            m[x, group.mul[x][g]] = 1
        mats.append(m)
    return Representation(group, d, tuple(mats), "regular")


def direct_sum(r1: Representation, r2: Representation) -> Representation:
    if r1.group is not r2.group:
        raise RepresentationError("representations of different groups")
    d = r1.dim + r2.dim
    mats = []
    for m1, m2 in zip(r1.matrices, r2.matrices):
        m = np.zeros((d, d), dtype=complex)
        m[: r1.dim, : r1.dim] = m1
        m[r1.dim:, r1.dim:] = m2
        mats.append(m)
    return Representation(r1.group, d, tuple(mats), f"{r1.name}+{r2.name}")


def conjugate(r: Representation, m: np.ndarray) -> Representation:
    """g -> M^-1 rho(g) M."""
    mi = np.linalg.inv(m)
    return Representation(r.group, r.dim, tuple(mi @ x @ m for x in r.matrices), f"{r.name}^M")


def cyclic_characters(group, generator: int) -> list[Representation]:
    """The #G one-dimensional characters of a cyclic group generated by ``generator``."""
    d = group.order
    if group.element_order(generator) != d:
        raise RepresentationError("element does not generate the group")
    reps = []
    for j in range(d):
        z = np.exp(2j * np.pi * j / d)
        reps.append(from_generators(group, {generator: np.array([[z]])}, name=f"chi{j}", check=False))
    return reps


def one_dimensional_characters(group, gens: Sequence[int] | None = None) -> list[Representation]:
    """All linear characters, by trying roots of unity on the generators."""
    gens = tuple(group.generators if gens is None else gens)
    if not gens:
        return [trivial_rep(group)]
    choices = [[np.exp(2j * np.pi * j / group.element_order(g)) for j in range(group.element_order(g))] for g in gens]
    out, seen = [], set()
    for combo in itertools.product(*choices):
        try:
            r = from_generators(group, {g: np.array([[z]]) for g, z in zip(gens, combo)}, f"chi{len(out)}")
        except RepresentationError:
            continue
        key = tuple(np.round(r.character(), 6))
        if key not in seen:
            seen.add(key)
            out.append(r)
    return out


# -- Artinized matrices ------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ArtinizedMatrices:
    a_rho: np.ndarray
    q_rho: np.ndarray
    c_rho: np.ndarray
    w_rho: np.ndarray
    leg_plus: int
    leg_minus: int
    dim: int


def charge_sum(c: CoveringData, rho: Representation, v: int) -> np.ndarray:
    """c_rho(v) = sum of rho(g) over the group at v."""
    return sum(rho(g) for g in c.quotient.vertex_groups[v])


def build_artinized(c: CoveringData, rho: Representation, tol: float = ROUND_TOL) -> ArtinizedMatrices:
    if rho.group is not c.action:
        raise RepresentationError("representation is not over the covering group")
    x = c.graph_x
    d = rho.dim
    n, k = x.n, x.k
    eye = np.eye(d)
    cv = [charge_sum(c, rho, v) for v in range(n)]
    fr = [rho(c.frobenius[h]) for h in range(k)]

    a = np.zeros((n * d, n * d), dtype=complex)
    for h in range(k):
        u, v = x.root[h], x.terminal(h)
        a[u * d:(u + 1) * d, v * d:(v + 1) * d] += fr[h]
    q = np.kron(valency_matrix(x), eye).astype(complex)
    cm = np.zeros((n * d, n * d), dtype=complex)
    for v in range(n):
        cm[v * d:(v + 1) * d, v * d:(v + 1) * d] = cv[v]

    w = np.zeros((k * d, k * d), dtype=complex)
    for h in range(k):
        hb = x.involution[h]
        for h2 in x.out[x.root[hb]]:
            blk = cv[x.root[h2]] - eye if h2 == hb else cv[x.root[h2]]
            w[h * d:(h + 1) * d, h2 * d:(h2 + 1) * d] = blk @ fr[h2]

    plus = minus = 0
    for leg in x.legs:
        t = np.trace(fr[leg])
        if abs(t.imag) > tol or abs(t.real - round(t.real)) > tol:
            raise RepresentationError(f"trace of rho(F(l)) = {t} is not an integer")
        t = int(round(t.real))
        if (d + t) % 2:
            raise RepresentationError("d + tr rho(F(l)) is odd")
        plus += (d + t) // 2
        minus += (d - t) // 2
    return ArtinizedMatrices(a, q, cm, w, plus, minus, d)


# -- L-functions --------------------------------------------------------------------

@dataclass(frozen=True)
class LResult:
    """Reciprocal L-function: complex form always, rounded integer form when possible."""

    complex_form: ComplexPolynomial
    rounded: Polynomial | None
    residual: float
    formula: str

    @property
    def ok(self) -> bool:
        return self.rounded is not None

    def text(self) -> str:
        if self.rounded is not None:
            return compact(self.rounded)
        return " + ".join(f"({z.real:.6g}{z.imag:+.6g}j)u^{i}" for i, z in enumerate(self.complex_form.coeffs))


def _finish(p: ComplexPolynomial, formula: str, tol: float) -> LResult:
    res = rounding_residual(p)
    try:
        r = round_to_int_poly(p, tol)
    except RoundingError:
        r = None
    return LResult(p, r, res, formula)


def _exact(p: Polynomial, formula: str) -> LResult:
    return LResult(p.to_complex(), p, 0.0, formula + ", exact")


def _det(*mats, exact: bool):
    if exact:
        ints = [np.round(m.real).astype(np.int64) for m in mats]
        return det_int(PolyMatrix.pencil(*ints))
    return det_complex(PolyMatrix.pencil(*mats))


def l_function_two_term(c: CoveringData, rho: Representation, tol: float = ROUND_TOL,
                        exact: bool | None = None) -> LResult:
    """det(I - W_rho u); integral representations go through exact arithmetic unless ``exact=False``."""
    w = build_artinized(c, rho).w_rho
    exact = rho.is_integral() if exact is None else exact
    p = _det(np.eye(len(w), dtype=complex), -w, exact=exact)
    return _exact(p, "two-term") if exact else _finish(p, "two-term", tol)


def l_function_three_term(c: CoveringData, rho: Representation, tol: float = ROUND_TOL,
                          exact: bool | None = None) -> LResult:
    """(1-u^2)^((b1-1)d) (1+u)^l+ (1-u)^l- det(I - C A u + (C Q - I) u^2), all Artinized."""
    art = build_artinized(c, rho)
    x = c.graph_x
    nd = len(art.a_rho)
    eye = np.eye(nd, dtype=complex)
    exact = rho.is_integral() if exact is None else exact
    core = _det(eye, -art.c_rho @ art.a_rho, art.c_rho @ art.q_rho - eye, exact=exact)
    kind = Polynomial if exact else ComplexPolynomial
    one_minus_u2 = kind((1, 0, -1))
    p = core * kind((1, 1)) ** art.leg_plus * kind((1, -1)) ** art.leg_minus
    e = (x.b1 - 1) * rho.dim
    if e >= 0:
        p = p * one_minus_u2 ** e
    elif exact:
        p = exact_quotient(p, one_minus_u2 ** (-e))
    else:
        p = complex_exact_quotient(p, one_minus_u2 ** (-e))
    return _exact(p, "three-term") if exact else _finish(p, "three-term", tol)


def l_inverse(c: CoveringData, rho: Representation) -> Polynomial:
    """Rounded L^-1 via the three-term formula; raises if it is not integral."""
    r = l_function_three_term(c, rho)
    if r.rounded is None:
        raise RoundingError(0, r.residual, ROUND_TOL)
    return r.rounded


def _close(a: Sequence[complex], b: Sequence[complex], tol: float) -> tuple[bool, float]:
    worst = 0.0
    for x, y in zip(a, b):
        worst = max(worst, abs(complex(x) - complex(y)) / max(1.0, abs(complex(y))))
    return worst <= tol, worst


def l_euler_verify(c: CoveringData, rho: Representation, order: int, allow_big: bool = False,
                   tol: float = EPS_DET) -> dict:
    """Truncated product of det(I - rho(F(Q)) u^l(Q))^-1 over base primes vs 1/L^-1."""
    primes = enumerate_gog_primes(c.quotient, order, allow_big) if order >= 1 else []
    acc = np.zeros(order + 1, dtype=complex)
    acc[0] = 1
    for q in primes:
        m = rho(frobenius_of_path(c, q.path))
        charpoly = np.poly(m)  # det(tI - M) = t^d + a_1 t^(d-1) + ...; det(I - Mt) = 1 + a_1 t + ...
        local = ComplexPolynomial(tuple(charpoly))
        inv = series_reciprocal(local, order // q.length)
        spread = np.zeros(order + 1, dtype=complex)
        for i, v in enumerate(inv):
            spread[i * q.length] = v
        acc = np.convolve(acc, spread)[: order + 1]
    target = series_reciprocal(l_function_three_term(c, rho).complex_form, order)
    ok, worst = _close(acc, target, tol)
    return {"order": order, "ok": ok, "max_rel_diff": worst, "primes": len(primes)}


# -- factorisation ------------------------------------------------------------------

def _inner(c1: np.ndarray, c2: np.ndarray) -> complex:
    return complex(np.vdot(c2, c1)) / len(c1)


def check_irreps(group, irreps: Sequence[Representation], tol: float = 1e-6) -> tuple[bool, str]:
    """Orthonormal characters and sum of squared degrees equal to #G."""
    chars = [r.character() for r in irreps]
    for i, ci in enumerate(chars):
        for j, cj in enumerate(chars):
            want = 1.0 if i == j else 0.0
            if abs(_inner(ci, cj) - want) > tol:
                why = "reducible" if i == j else "isomorphic to another entry"
                return False, f"{irreps[i].name} is {why}"
    total = sum(r.dim ** 2 for r in irreps)
    if total != group.order:
        return False, f"sum of squared degrees is {total}, group order is {group.order}"
    return True, "complete set of irreducible characters"


def factorization_check(c: CoveringData, irreps: Sequence[Representation]) -> dict:
    """zeta(Y)^-1 = prod (L^-1)^{d_rho}, and zeta(X)^-1 divides zeta(Y)^-1."""
    complete, why = check_irreps(c.action, irreps)
    zy = zeta_inverse(c.graph_y)
    zx = zeta_gog_two_term(c.quotient)
    rows = []
    prod_c = ComplexPolynomial((1,))
    prod: Polynomial | None = Polynomial((1,))
    for r in irreps:
        lr = l_function_three_term(c, r)
        rows.append({"name": r.name, "dim": r.dim, "l_inv": lr.text(), "residual": lr.residual})
        prod_c = prod_c * lr.complex_form ** r.dim
        prod = prod * lr.rounded ** r.dim if prod is not None and lr.rounded is not None else None
    if prod is None:  # some L^-1 is not integral; fall back to the complex product
        # float error grows with coefficient size; stays far below 1/2 for any realistic cover
        scale = max(abs(z) for z in prod_c.coeffs)
        try:
            prod = round_to_int_poly(prod_c, max(ROUND_TOL, 1e-12 * scale))
        except RoundingError:
            prod = None
    product_ok = prod is not None and prod == zy
    q = divides(zx, zy)
    return {
        "irreps_ok": complete,
        "irreps_message": why,
        "zeta_y_inv": compact(zy),
        "zeta_x_inv": compact(zx),
        "l_functions": rows,
        "product": compact(prod) if prod is not None else None,
        "product_residual": prod_c.max_abs_diff(zy.to_complex()),
        "product_ok": bool(product_ok),
        "divides": q is not None,
        "quotient": compact(q) if q is not None else None,
        "ok": bool(complete and product_ok and q is not None),
    }
