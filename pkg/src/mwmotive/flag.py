"""Mod-2 coinvariant algebra of S_n, Sq², and the T_a generators.

Classes are sets of exponent vectors (coefficients in Z/2) in the staircase
basis 0 <= α_i <= n - i.  Reduction uses h_{n-i+1}(x_1..x_i) = 0, whose
leading term in the lex order x_n > ... > x_1 is x_i^{n-i+1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from . import gf2

Exponent = Tuple[int, ...]


class FlagError(ValueError):
    pass


@lru_cache(maxsize=None)
def _compositions(total: int, parts: int) -> Tuple[Exponent, ...]:
    if parts == 0:
        return ((),) if total == 0 else ()
    out = []
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            out.append((first,) + rest)
    return tuple(out)


def _lex_key(e: Exponent):
    return tuple(reversed(e))


@lru_cache(maxsize=None)
def _reduce_monomial(e: Exponent) -> FrozenSet[Exponent]:
    n = len(e)
    bad = [i for i in range(n) if e[i] > n - 1 - i]
    if not bad:
        return frozenset([e])
    i = bad[-1]  # 0-based; the relation is h_{n-i}(x_1..x_{i+1})
    d = n - i
    base = list(e)
    base[i] -= d
    out: set = set()
    for m in _compositions(d, i + 1):
        if m[i] == d:
            continue
        new = tuple(base[j] + (m[j] if j <= i else 0) for j in range(n))
        out ^= _reduce_monomial(new)
    return frozenset(out)


def _reduce(monomials: Iterable[Exponent]) -> FrozenSet[Exponent]:
    out: set = set()
    for e in monomials:
        out ^= _reduce_monomial(e)
    return frozenset(out)


@dataclass(frozen=True)
class FlagClass:
    n: int
    terms: FrozenSet[Exponent]

    def __post_init__(self):
        for e in self.terms:
            if len(e) != self.n or any(not 0 <= a <= self.n - 1 - i for i, a in enumerate(e)):
                raise FlagError(f"{e} is not a staircase exponent for n={self.n}")

    @classmethod
    def zero(cls, n: int) -> "FlagClass":
        return cls(n, frozenset())

    @classmethod
    def one(cls, n: int) -> "FlagClass":
        return cls(n, frozenset([(0,) * n]))

    @classmethod
    def variable(cls, n: int, i: int) -> "FlagClass":
        """x_i, 1-based."""
        return normal_form(n, [tuple(1 if j == i - 1 else 0 for j in range(n))])

    def __add__(self, other: "FlagClass") -> "FlagClass":
        self._same(other)
        return FlagClass(self.n, self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: "FlagClass") -> "FlagClass":
        self._same(other)
        counts: Dict[Exponent, int] = {}
        for a in self.terms:
            for b in other.terms:
                e = tuple(x + y for x, y in zip(a, b))
                counts[e] = counts.get(e, 0) ^ 1
        return normal_form(self.n, [e for e, c in counts.items() if c])

    def __pow__(self, k: int) -> "FlagClass":
        out = FlagClass.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.terms)

    def _same(self, other):
        if self.n != other.n:
            raise FlagError("classes of different flag varieties")

    @property
    def degrees(self) -> List[int]:
        return sorted({sum(e) for e in self.terms})

    def vector(self, basis: List[Exponent]) -> int:
        index = {e: j for j, e in enumerate(basis)}
        v = 0
        for e in self.terms:
            v |= 1 << index[e]
        return v

    def sorted_terms(self) -> List[Exponent]:
        return sorted(self.terms, key=_lex_key, reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in self.sorted_terms():
            factors = [f"x{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(e) if a]
            parts.append("*".join(factors) or "1")
        return " + ".join(parts)


def normal_form(n: int, monomials: Iterable[Exponent]) -> FlagClass:
    """Reduce a mod-2 polynomial (a list of exponent vectors, repeats cancel)."""
    counts: Dict[Exponent, int] = {}
    for e in monomials:
        e = tuple(e)
        if len(e) != n:
            raise FlagError(f"{e} does not have {n} exponents")
        counts[e] = counts.get(e, 0) ^ 1
    return FlagClass(n, _reduce(e for e, c in counts.items() if c))


def staircase_basis(n: int, degree: int) -> List[Exponent]:
    out = [e for e in _compositions(degree, n) if all(a <= n - 1 - i for i, a in enumerate(e))]
    return sorted(out, key=_lex_key, reverse=True)


def top_degree(n: int) -> int:
    return n * (n - 1) // 2


def _sq2_raw(terms: Iterable[Exponent]) -> List[Exponent]:
    out = []
    for e in terms:
        for i, a in enumerate(e):
            if a % 2:
                out.append(e[:i] + (a + 1,) + e[i + 1:])
    return out


def sq2_flag(c: FlagClass) -> FlagClass:
    """The derivation x_i ↦ x_i², then reduction."""
    return normal_form(c.n, _sq2_raw(c.terms))


def complete_homog(i: int, j: int, n: int) -> FlagClass:
    """h_i(x_1..x_j) in normal form."""
    if not 0 <= j <= n:
        raise FlagError(f"need 0 <= j <= n, got j={j}")
    if i < 0:
        return FlagClass.zero(n)
    monos = [m + (0,) * (n - j) for m in _compositions(i, j)]
    return normal_form(n, monos)


@lru_cache(maxsize=None)
def _sq2_images(n: int, degree: int) -> Tuple[int, ...]:
    target = staircase_basis(n, degree + 1)
    return tuple(sq2_flag(FlagClass(n, frozenset([e]))).vector(target)
                 for e in staircase_basis(n, degree))


def solve_sq2(target: FlagClass, num_vars: Optional[int] = None) -> Optional[FlagClass]:
    """Some u with Sq²(u) = target, or None.

    With ``num_vars`` set, u is sought among polynomials in x_1..x_{num_vars};
    the relations never introduce later variables, so this is a subspace of
    the staircase basis.
    """
    if not target:
        return FlagClass.zero(target.n)
    degs = target.degrees
    if len(degs) != 1:
        raise FlagError("solve_sq2 needs a homogeneous target")
    d = degs[0]
    if d == 0:
        return None
    n = target.n
    m = n if num_vars is None else num_vars
    source = staircase_basis(n, d - 1)
    cols = [j for j, e in enumerate(source) if not any(e[m:])]
    images = _sq2_images(n, d - 1)
    mask = gf2.solve([images[j] for j in cols], target.vector(staircase_basis(n, d)))
    if mask is None:
        return None
    return FlagClass(n, frozenset(source[cols[j]] for j in gf2.bits(mask)))


def t_degree(n: int, a: int) -> int:
    if n % 2 == 0 and a == n // 2:
        return n - 1
    return 4 * a - 1


def t_class(n: int, a: int) -> FlagClass:
    """T_a: a Sq²-closed class of degree 4a-1 (n-1 for a = n/2)."""
    if not 1 <= a <= n // 2:
        raise FlagError(f"need 1 <= a <= {n // 2}, got a={a}")
    if n % 2 == 0 and a == n // 2:
        return FlagClass.variable(n, 1) ** (n - 1)
    h_even = complete_homog(2 * a, n - 2 * a, n)
    h_odd = complete_homog(2 * a - 1, n - 2 * a + 1, n)
    u = solve_sq2(h_even * h_even, num_vars=n - 2 * a)
    if u is None:
        raise FlagError(f"no u solves Sq²(u) = h_{2 * a}² for n={n}")
    return h_even * h_odd + u


def e_flag_dims(n: int) -> List[int]:
    dims = []
    for d in range(top_degree(n) + 1):
        out = _sq2_images(n, d)
        ker = len(out) - gf2.rank(out)
        im = gf2.rank(_sq2_images(n, d - 1)) if d else 0
        dims.append(ker - im)
    return dims


def exterior_dims(n: int) -> List[int]:
    """Coefficients of Π_a (1 + q^deg(a))."""
    poly = [1]
    for a in range(1, n // 2 + 1):
        d = t_degree(n, a)
        nxt = poly + [0] * d
        for j, c in enumerate(poly):
            nxt[j + d] += c
        poly = nxt
    return poly + [0] * (top_degree(n) + 1 - len(poly))


def exterior_check(n: int) -> bool:
    """Products of distinct T_a form a basis of E; each T_a² dies in E."""
    ts = [t_class(n, a) for a in range(1, n // 2 + 1)]
    for t in ts:
        if sq2_flag(t):
            return False
        sq = t * t
        if sq:
            d = sq.degrees[0]
            if not gf2.in_span(sq.vector(staircase_basis(n, d)), _sq2_images(n, d - 1)):
                return False
    by_degree: Dict[int, List[FlagClass]] = {}
    for size in range(len(ts) + 1):
        for subset in combinations(range(len(ts)), size):
            p = FlagClass.one(n)
            for i in subset:
                p = p * ts[i]
            deg = sum(t_degree(n, i + 1) for i in subset)
            if sq2_flag(p):
                return False
            by_degree.setdefault(deg, []).append(p)
    dims = e_flag_dims(n)
    for d, dim in enumerate(dims):
        prods = by_degree.get(d, [])
        if len(prods) != dim:
            return False
        if not prods:
            continue
        basis = staircase_basis(n, d)
        im = [v for v in _sq2_images(n, d - 1)] if d else []
        vecs = [p.vector(basis) for p in prods]
        if gf2.rank(im + vecs) != gf2.rank(im) + len(vecs):
            return False
    return True
