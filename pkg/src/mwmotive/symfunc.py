"""Determinantal Schur basis x_Λ of R[x_1..x_n] and the Sq² derivation on it.

x_{a_1..a_l} is the l×l determinant with (i, j) entry x_{a_i - i + j},
where x_0 = 1 and x_i = 0 outside [0, n].  Identifying x_i with the i-th
elementary symmetric polynomial makes x_Λ the Schur polynomial of the
transposed shape, so products follow Pieri rules with horizontal strips
in x-indexing.

Polynomials in the generators x_1..x_n are dicts keyed by the ascending
tuple of generator indices of a monomial; Schur combinations are dicts
keyed by partitions.  Integer coefficients are exact Python ints.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from . import gf2
from .tableau import Shape, is_completely_even, partitions, transpose

Monomial = Tuple[int, ...]
Poly = Dict[Monomial, int]


class SymfuncError(ValueError):
    pass


def _clean(d: dict, mod2: bool) -> dict:
    if mod2:
        return {k: 1 for k, v in d.items() if v % 2}
    return {k: v for k, v in d.items() if v}


def _acc(out: dict, key, value) -> None:
    out[key] = out.get(key, 0) + value


@dataclass(frozen=True)
class SchurCombo:
    """Finite combination of x_Λ with parts of Λ at most ``num_vars``."""

    terms: Tuple[Tuple[Shape, int], ...]
    num_vars: int
    mod2: bool = False

    @classmethod
    def of(cls, terms: Dict[Shape, int], num_vars: int, mod2: bool = False) -> "SchurCombo":
        cleaned = _clean(terms, mod2)
        for shape in cleaned:
            if shape and shape[0] > num_vars:
                raise SymfuncError(f"x_{shape} has a part above n={num_vars}")
        return cls(tuple(sorted(cleaned.items(), key=lambda kv: _skey(kv[0]))), num_vars, mod2)

    @classmethod
    def basis(cls, shape: Shape, num_vars: int, mod2: bool = False) -> "SchurCombo":
        return cls.of({tuple(shape): 1}, num_vars, mod2)

    def as_dict(self) -> Dict[Shape, int]:
        return dict(self.terms)

    def _like(self, other: "SchurCombo"):
        if (self.num_vars, self.mod2) != (other.num_vars, other.mod2):
            raise SymfuncError("combinations live in different rings")

    def __add__(self, other: "SchurCombo") -> "SchurCombo":
        self._like(other)
        out = self.as_dict()
        for k, v in other.terms:
            _acc(out, k, v)
        return SchurCombo.of(out, self.num_vars, self.mod2)

    def __neg__(self):
        return SchurCombo.of({k: -v for k, v in self.terms}, self.num_vars, self.mod2)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "SchurCombo") -> "SchurCombo":
        return product(self, other)

    def __bool__(self):
        return bool(self.terms)


def _skey(shape: Shape):
    return (sum(shape),) + tuple(-x for x in shape) + (1,)


@lru_cache(maxsize=None)
def _det_expand(index: Tuple[int, ...], n: int) -> Tuple[Tuple[Monomial, int], ...]:
    # Laplace expansion along the first column
    while index and index[-1] == 0:
        index = index[:-1]
    if not index:
        return (((), 1),)
    out: Poly = {}
    for i, a in enumerate(index, start=1):
        g = a - i + 1
        if g < 0 or g > n:
            continue
        minor = tuple(x + 1 for x in index[: i - 1]) + index[i:]
        sign = -1 if i % 2 == 0 else 1
        for mono, c in _det_expand(minor, n):
            key = tuple(sorted(mono + (g,))) if g else mono
            _acc(out, key, sign * c)
    return tuple(sorted(_clean(out, False).items()))


def det_expand(shape: Sequence[int], num_vars: int) -> Poly:
    """x_Λ as a polynomial in the single-index generators x_1..x_n."""
    return dict(_det_expand(tuple(shape), num_vars))


def pieri(t: int, shape: Shape, num_vars: int) -> Dict[Shape, int]:
    """x_t · x_Λ as a sum of x_b over interleaving b (coefficients all 1)."""
    if t < 0 or t > num_vars:
        return {}
    if t == 0:
        return {tuple(shape): 1}
    a = tuple(shape)
    l = len(a)
    total = t + sum(a)
    out: Dict[Shape, int] = {}

    def grow(i: int, prefix: List[int], remaining: int):
        # choose b_{i+1} (0-based i) with a_i <= b_i <= a_{i-1}
        if i == l:
            if remaining <= (a[-1] if a else num_vars):
                b = tuple(x for x in prefix + [remaining] if x)
                if not b or b[0] <= num_vars:
                    out[b] = 1
            return
        low = a[i]
        high = num_vars if i == 0 else a[i - 1]
        for b in range(low, min(high, low + remaining) + 1):
            grow(i + 1, prefix + [b], remaining - (b - low))

    grow(0, [], t)
    assert all(sum(b) == total for b in out)
    return out


@lru_cache(maxsize=None)
def _apply_monomial(mono: Monomial, shape: Shape, num_vars: int) -> Tuple[Tuple[Shape, int], ...]:
    current = {shape: 1}
    for g in mono:
        nxt: Dict[Shape, int] = {}
        for s, c in current.items():
            for b, d in pieri(g, s, num_vars).items():
                _acc(nxt, b, c * d)
        current = _clean(nxt, False)
    return tuple(current.items())


def poly_to_schur(poly: Poly, num_vars: int, mod2: bool = False) -> SchurCombo:
    """Re-express a polynomial in the generators in the x_Λ basis."""
    out: Dict[Shape, int] = {}
    for mono, c in poly.items():
        for s, d in _apply_monomial(mono, (), num_vars):
            _acc(out, s, c * d)
    return SchurCombo.of(out, num_vars, mod2)


@lru_cache(maxsize=None)
def _basis_product(s1: Shape, s2: Shape, num_vars: int) -> Tuple[Tuple[Shape, int], ...]:
    out: Dict[Shape, int] = {}
    for mono, c in _det_expand(s1, num_vars):
        for s, d in _apply_monomial(mono, s2, num_vars):
            _acc(out, s, c * d)
    return tuple(_clean(out, False).items())


def basis_product(s1: Shape, s2: Shape, num_vars: int) -> Dict[Shape, int]:
    """x_{s1} · x_{s2} in the x_Λ basis, over Z."""
    if sum(s1) > sum(s2):
        s1, s2 = s2, s1
    return dict(_basis_product(tuple(s1), tuple(s2), num_vars))


def product(c1: SchurCombo, c2: SchurCombo) -> SchurCombo:
    c1._like(c2)
    out: Dict[Shape, int] = {}
    for s1, a in c1.terms:
        for s2, b in c2.terms:
            for s, c in basis_product(s1, s2, c1.num_vars).items():
                _acc(out, s, a * b * c)
    return SchurCombo.of(out, c1.num_vars, c1.mod2)


def lr_coefficient(s1: Shape, s2: Shape, shape: Shape, num_vars: Optional[int] = None) -> int:
    """Littlewood-Richardson coefficient c^Λ_{S1,S2}."""
    if num_vars is None:
        num_vars = max(sum(s1) + sum(s2), 1)
    return basis_product(tuple(s1), tuple(s2), num_vars).get(tuple(shape), 0)


def _sq2_generator(g: int, n: int) -> Poly:
    # Sq²(x_g) = (g+1) x_{g+1} + x_1 x_g over Z/2
    out: Poly = {}
    if (g + 1) % 2 and g + 1 <= n:
        out[(g + 1,)] = 1
    _acc(out, tuple(sorted((1, g))), 1)
    return _clean(out, True)


def sq2_poly(c: SchurCombo) -> SchurCombo:
    """Sq² as the derivation of Z/2[x_1..x_n], re-expressed in the x_Λ basis."""
    if not c.mod2:
        raise SymfuncError("Sq² is defined on mod-2 combinations only")
    n = c.num_vars
    poly: Poly = {}
    for shape, coeff in c.terms:
        for mono, a in det_expand(shape, n).items():
            if not (a * coeff) % 2:
                continue
            for pos, g in enumerate(mono):
                rest = mono[:pos] + mono[pos + 1:]
                for m2, b in _sq2_generator(g, n).items():
                    _acc(poly, tuple(sorted(rest + m2)), b)
    return poly_to_schur(_clean(poly, True), n, mod2=True)


def sq2_closed_form(shape: Shape, num_vars: int) -> SchurCombo:
    """Σ (a_i - i + 1) x_{..a_i+1..} + l · x_{a_1..a_l,1}, mod 2."""
    a = tuple(shape)
    l = len(a)
    out: Dict[Shape, int] = {}
    for i in range(1, l + 1):
        coeff = a[i - 1] - i + 1
        if coeff % 2 == 0:
            continue
        bumped = a[: i - 1] + (a[i - 1] + 1,) + a[i:]
        if i > 1 and bumped[i - 1] > bumped[i - 2]:
            continue  # two equal rows in the determinant
        if bumped[0] > num_vars:
            continue
        _acc(out, bumped, 1)
    if l % 2 and l:
        _acc(out, a + (1,), 1)
    return SchurCombo.of(out, num_vars, mod2=True)


def schur_basis(num_vars: int, degree: int) -> List[Shape]:
    return list(partitions(degree, num_vars)) if degree >= 0 else []


def _sq2_images(num_vars: int, degree: int) -> List[int]:
    target = {s: j for j, s in enumerate(schur_basis(num_vars, degree + 1))}
    images = []
    for s in schur_basis(num_vars, degree):
        v = 0
        for t, _ in sq2_closed_form(s, num_vars).terms:
            v |= 1 << target[t]
        images.append(v)
    return images


def ker_im_split_poly(num_vars: int, degree: int) -> dict:
    """Check Ker(Sq²) = Im(Sq²) ⊕ span(completely even x_Λ) in one degree."""
    basis = schur_basis(num_vars, degree)
    out_images = _sq2_images(num_vars, degree)
    in_images = _sq2_images(num_vars, degree - 1) if degree > 0 else []
    ker_dim = len(basis) - gf2.rank(out_images)
    im_dim = gf2.rank(in_images)
    evens = [1 << j for j, s in enumerate(basis) if is_completely_even(s)]
    evens_closed = all(out_images[j] == 0 for j, s in enumerate(basis) if is_completely_even(s))
    combined = gf2.rank(in_images + evens)
    verified = (
        evens_closed
        and combined == im_dim + len(evens)
        and ker_dim == im_dim + len(evens)
    )
    return {
        "ker_dim": ker_dim,
        "im_dim": im_dim,
        "completely_even_count": len(evens),
        "verified": verified,
    }


def sq2_squared_vanishes(num_vars: int, degree: int) -> bool:
    first = _sq2_images(num_vars, degree)
    second = _sq2_images(num_vars, degree + 1)
    return all(gf2.combine(second, v) == 0 for v in first)


# -- generating series -------------------------------------------------------


@dataclass(frozen=True)
class CoeffSeries:
    """1 - a_1 t + a_2 t^2 - ... ; stores the unsigned a_1..a_m."""

    coeffs: Tuple[int, ...] = field(default_factory=tuple)

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def a(self, i: int) -> int:
        if i == 0:
            return 1
        return self.coeffs[i - 1] if 1 <= i <= len(self.coeffs) else 0

    def signed(self) -> List[int]:
        return [(-1) ** i * self.a(i) for i in range(self.degree + 1)]

    def __mul__(self, other: "CoeffSeries") -> "CoeffSeries":
        p, q = self.signed(), other.signed()
        prod = [0] * (len(p) + len(q) - 1)
        for i, x in enumerate(p):
            for j, y in enumerate(q):
                prod[i + j] += x * y
        return CoeffSeries(tuple((-1) ** i * prod[i] for i in range(1, len(prod))))

    def inverse_coeffs(self, m: int) -> List[int]:
        """Coefficients of 1/f(t) up to t^m."""
        p = self.signed()
        inv = [1]
        for i in range(1, m + 1):
            inv.append(-sum(p[j] * inv[i - j] for j in range(1, min(i, len(p) - 1) + 1)))
        return inv

    def schur_value(self, shape: Shape) -> int:
        """a_Λ: the determinant x_Λ evaluated at x_i = a_i."""
        return evaluate(det_expand(shape, self.degree), self.a)


def evaluate(poly: Poly, value) -> int:
    total = 0
    for mono, c in poly.items():
        term = c
        for g in mono:
            term *= value(g)
        total += term
    return total


def inversion_identities(f: CoeffSeries, g: CoeffSeries, m: int) -> bool:
    """The four column/row inversion identities for h = f·g, degrees 0..m.

    The column values a_{1^i} are taken from the determinants and must agree
    with the coefficients of 1/f(t).
    """
    h = f * g
    cols = {}
    for name, s in (("a", f), ("b", g), ("c", h)):
        det_vals = [s.schur_value((1,) * i) for i in range(m + 1)]
        if det_vals != s.inverse_coeffs(m):
            return False
        cols[name] = det_vals
    for d in range(m + 1):
        checks = [
            (sum((-1) ** i * cols["b"][i] * h.a(d - i) for i in range(d + 1)), f.a(d)),
            (sum((-1) ** i * cols["a"][i] * h.a(d - i) for i in range(d + 1)), g.a(d)),
            (sum((-1) ** i * g.a(i) * cols["c"][d - i] for i in range(d + 1)), cols["a"][d]),
            (sum((-1) ** i * f.a(i) * cols["c"][d - i] for i in range(d + 1)), cols["b"][d]),
        ]
        if any(lhs != rhs for lhs, rhs in checks):
            return False
    return True


def random_series(rng: random.Random, degree: int, bound: int = 9) -> CoeffSeries:
    return CoeffSeries(tuple(rng.randint(-bound, bound) for _ in range(degree)))


# -- multivariate polynomials in explicit variables, for specialisations ------

VPoly = Dict[Tuple[int, ...], int]


def _vmul(p: VPoly, q: VPoly) -> VPoly:
    out: VPoly = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            _acc(out, tuple(x + y for x, y in zip(e1, e2)), c1 * c2)
    return _clean(out, False)


def _vadd(p: VPoly, q: VPoly, scale: int = 1) -> VPoly:
    out = dict(p)
    for e, c in q.items():
        _acc(out, e, scale * c)
    return _clean(out, False)


def elementary(i: int, variables: Sequence[int], nvars: int) -> VPoly:
    """e_i in the listed variable slots of an nvars-variable ring."""
    if i == 0:
        return {(0,) * nvars: 1}
    out: VPoly = {}
    for combo in combinations(list(variables), i):
        e = [0] * nvars
        for v in combo:
            e[v] = 1
        out[tuple(e)] = 1
    return out


def specialize(shape: Shape, variables: Sequence[int], nvars: int) -> VPoly:
    """x_Λ with x_i := e_i(variables)."""
    gens = {i: elementary(i, variables, nvars) for i in range(1, len(variables) + 1)}
    out: VPoly = {}
    for mono, c in det_expand(shape, len(variables)).items():
        term: VPoly = {(0,) * nvars: c}
        for g in mono:
            term = _vmul(term, gens[g])
        out = _vadd(out, term)
    return out


def _contained(s: Shape, big: Shape) -> bool:
    return len(s) <= len(big) and all(x <= y for x, y in zip(s, big))


def lr_support_check(shape: Shape, k: int, n: int) -> bool:
    """Coproduct expansion of c_Λ over a_{S1} b_{S2}, and its support.

    a, b, c are the elementary symmetric polynomials of x_1..x_k,
    y_1..y_{n-k} and of all n variables.  Checks (i) the LR expansion
    reproduces c_Λ, (ii) every nonzero c^Λ_{S1,S2} has S1, S2 ≤ Λ, and
    (iii) the surviving a-factors have parts at most k (b-factors at most
    n - k).
    """
    shape = tuple(shape)
    size = sum(shape)
    big = max(size, 1)
    xs, ys = list(range(k)), list(range(k, n))
    lhs = specialize(shape, xs + ys, n)
    rhs: VPoly = {}
    for s in range(size + 1):
        for s1 in partitions(s):
            for s2 in partitions(size - s):
                c = lr_coefficient(s1, s2, shape, big)
                if not c:
                    continue
                if not (_contained(s1, shape) and _contained(s2, shape)):
                    return False
                a_part = specialize(s1, xs, n) if not s1 or s1[0] <= k else {}
                b_part = specialize(s2, ys, n) if not s2 or s2[0] <= n - k else {}
                rhs = _vadd(rhs, _vmul(a_part, b_part), c)
    return lhs == rhs


def completely_even_shapes(num_vars: int, degree: int) -> List[Shape]:
    return [s for s in schur_basis(num_vars, degree) if is_completely_even(s)]


def to_schubert(c: SchurCombo) -> Dict[Shape, int]:
    """Dictionary x_Λ ↔ σ_{Λᵀ}."""
    return {transpose(s): v for s, v in c.terms}
