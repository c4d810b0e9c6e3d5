"""Schubert cycles on (truncated) tableau bases, Sq² and the E-groups.

A cycle is a finite table shape -> coefficient, either over Z or mod 2.
Products go through the symmetric-function engine under σ_Λ ↔ x_{Λᵀ}
and are truncated afterwards.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import gf2, lattice, symfunc
from .tableau import (
    Shape,
    Tableau,
    Truncation,
    Twist,
    add_set,
    classify,
    eta_indices,
    irredundant_components,
    is_even,
    shape_key,
    shapes_of_degree,
    transpose,
)


class CycleError(ValueError):
    pass


@dataclass(frozen=True)
class Cycle:
    terms: Tuple[Tuple[Shape, int], ...]
    twist: Twist = Twist.UNTWISTED
    truncation: Optional[Truncation] = None
    mod2: bool = False

    @classmethod
    def of(cls, terms: Dict[Shape, int], twist: Twist = Twist.UNTWISTED,
           truncation: Optional[Truncation] = None, mod2: bool = False) -> "Cycle":
        clean = {}
        for shape, c in terms.items():
            shape = tuple(shape)
            c = c % 2 if mod2 else c
            if not c:
                continue
            if truncation is not None and not truncation.admits(shape):
                raise CycleError(f"{shape} is not {truncation}-truncated")
            clean[shape] = c
        ordered = sorted(clean.items(), key=lambda kv: (sum(kv[0]), shape_key(kv[0])))
        return cls(tuple(ordered), twist, truncation, mod2)

    @classmethod
    def sigma(cls, shape: Sequence[int], twist: Twist = Twist.UNTWISTED,
              truncation: Optional[Truncation] = None, mod2: bool = False) -> "Cycle":
        return cls.of({tuple(shape): 1}, twist, truncation, mod2)

    @classmethod
    def zero(cls, twist=Twist.UNTWISTED, truncation=None, mod2=False) -> "Cycle":
        return cls((), twist, truncation, mod2)

    def _like(self, **kw) -> dict:
        args = dict(twist=self.twist, truncation=self.truncation, mod2=self.mod2)
        args.update(kw)
        return args

    def as_dict(self) -> Dict[Shape, int]:
        return dict(self.terms)

    def coeff(self, shape: Sequence[int]) -> int:
        return self.as_dict().get(tuple(shape), 0)

    def _check(self, other: "Cycle"):
        if (self.twist, self.truncation, self.mod2) != (other.twist, other.truncation, other.mod2):
            raise CycleError("cycles live in different groups")

    def __add__(self, other: "Cycle") -> "Cycle":
        self._check(other)
        out = self.as_dict()
        for s, c in other.terms:
            out[s] = out.get(s, 0) + c
        return Cycle.of(out, **self._like())

    def __neg__(self) -> "Cycle":
        return self.scale(-1)

    def __sub__(self, other: "Cycle") -> "Cycle":
        return self + (-other)

    def scale(self, c: int) -> "Cycle":
        return Cycle.of({s: c * v for s, v in self.terms}, **self._like())

    def __rmul__(self, c: int) -> "Cycle":
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return product(self, other)

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def degrees(self) -> List[int]:
        return sorted({sum(s) for s, _ in self.terms})

    @property
    def degree(self) -> Optional[int]:
        """The common degree of a nonzero homogeneous cycle, else None."""
        d = self.degrees
        return d[0] if len(d) == 1 else None

    def reduce(self) -> "Cycle":
        return Cycle.of(self.as_dict(), **self._like(mod2=True))

    def lift(self) -> "Cycle":
        return Cycle.of(self.as_dict(), **self._like(mod2=False))

    def vector(self, basis: Sequence[Shape]) -> List[int]:
        index = {s: i for i, s in enumerate(basis)}
        v = [0] * len(basis)
        for s, c in self.terms:
            if s not in index:
                raise CycleError(f"{s} is not in the given basis")
            v[index[s]] = c
        return v

    def bitvector(self, basis: Sequence[Shape]) -> int:
        out = 0
        for j, c in enumerate(self.vector(basis)):
            if c % 2:
                out |= 1 << j
        return out

    def to_json(self) -> list:
        return [{"shape": list(s), "coeff": c} for s, c in self.terms]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for s, c in self.terms:
            name = "σ_" + (",".join(map(str, s)) if s else "∅")
            parts.append(name if c == 1 else f"{c}{name}")
        return " + ".join(parts)


def _twist_of(twist) -> Twist:
    return twist if isinstance(twist, Twist) else Twist.of(bool(twist))


def sq2(c: Cycle) -> Cycle:
    """Λ ↦ Σ_{T ∈ A(Λ)} T, extended linearly; coefficients +1 over Z."""
    out: Dict[Shape, int] = {}
    for shape, coeff in c.terms:
        for t in add_set(Tableau(shape, c.twist), c.truncation):
            out[t] = out.get(t, 0) + coeff
    return Cycle.of(out, c.twist, c.truncation, c.mod2)


def truncate(c: Cycle, tr: Truncation) -> Cycle:
    src = c.truncation
    if src is not None and (tr.k > src.k or tr.width > src.width):
        raise CycleError(f"cannot truncate {src} cycles to the larger {tr}")
    kept = {s: v for s, v in c.terms if tr.admits(s)}
    return Cycle.of(kept, c.twist, tr, c.mod2)


def product(c1: Cycle, c2: Cycle) -> Cycle:
    """Schubert product, computed untruncated and then truncated."""
    if c1.mod2 != c2.mod2 or c1.truncation != c2.truncation:
        raise CycleError("cycles live in different rings")
    out: Dict[Shape, int] = {}
    for s1, a in c1.terms:
        for s2, b in c2.terms:
            for s, c in _sigma_product(s1, s2).items():
                out[s] = out.get(s, 0) + a * b * c
    tr = c1.truncation
    if tr is not None:
        out = {s: v for s, v in out.items() if tr.admits(s)}
    return Cycle.of(out, c1.twist + c2.twist, tr, c1.mod2)


def _sigma_product(s1: Shape, s2: Shape) -> Dict[Shape, int]:
    # σ_Λ ↔ x_{Λᵀ}; rows of the product never exceed len(s1) + len(s2)
    nv = max(len(s1) + len(s2), 1)
    prod = symfunc.basis_product(transpose(s1), transpose(s2), nv)
    return {transpose(s): c for s, c in prod.items()}


# -- matrices and E-groups ----------------------------------------------------


@lru_cache(maxsize=None)
def _sq2_images(tr: Optional[Truncation], twist: Twist, degree: int) -> Tuple[int, ...]:
    target = {s: j for j, s in enumerate(shapes_of_degree(tr, degree + 1))}
    images = []
    for s in shapes_of_degree(tr, degree):
        v = 0
        for t in add_set(Tableau(s, twist), tr):
            v |= 1 << target[t]
        images.append(v)
    return tuple(images)


@dataclass(frozen=True)
class Sq2Matrix:
    """Sq² from degree d to d+1 over GF(2); column j is the image of source[j]."""

    degree: int
    source: Tuple[Shape, ...]
    target: Tuple[Shape, ...]
    columns: Tuple[int, ...]

    def rows(self) -> List[List[int]]:
        return [[(col >> i) & 1 for col in self.columns] for i in range(len(self.target))]

    @property
    def rank(self) -> int:
        return gf2.rank(self.columns)


def sq2_matrix(tr: Optional[Truncation], twist: Twist, degree: int) -> Sq2Matrix:
    return Sq2Matrix(
        degree,
        tuple(shapes_of_degree(tr, degree)),
        tuple(shapes_of_degree(tr, degree + 1)),
        _sq2_images(tr, _twist_of(twist), degree),
    )


def ker_dimension(tr, twist, degree: int) -> int:
    m = sq2_matrix(tr, twist, degree)
    return len(m.source) - m.rank


def im_dimension(tr, twist, degree: int) -> int:
    """Dimension of the image of Sq² inside degree ``degree``."""
    if degree <= 0:
        return 0
    return sq2_matrix(tr, twist, degree - 1).rank


def e_dimension(tr: Optional[Truncation], twist: Twist, degree: int) -> int:
    return ker_dimension(tr, twist, degree) - im_dimension(tr, twist, degree)


def even_shapes(tr: Optional[Truncation], twist: Twist, degree: int) -> List[Shape]:
    twist = _twist_of(twist)
    return [s for s in shapes_of_degree(tr, degree) if is_even(Tableau(s, twist), tr)]


@dataclass(frozen=True)
class KerImSplit:
    degree: int
    im_basis: Tuple[Cycle, ...]
    even_basis: Tuple[Shape, ...]
    ker_dim: int
    verified: bool


def ker_im_split(tr: Optional[Truncation], twist: Twist, degree: int) -> KerImSplit:
    """Ker(Sq²)_d = Im(Sq²)_d ⊕ span(even tableaux of degree d)?"""
    twist = _twist_of(twist)
    basis = shapes_of_degree(tr, degree)
    incoming = list(_sq2_images(tr, twist, degree - 1)) if degree > 0 else []
    outgoing = _sq2_images(tr, twist, degree)
    pivots, _ = gf2._reduce(incoming)
    im_vectors = [v for v, _ in pivots.values()]
    evens = even_shapes(tr, twist, degree)
    even_vectors = [1 << basis.index(s) for s in evens]
    ker_dim = len(basis) - gf2.rank(outgoing)
    evens_in_kernel = all(outgoing[basis.index(s)] == 0 for s in evens)
    independent = gf2.rank(im_vectors + even_vectors) == len(im_vectors) + len(evens)
    verified = evens_in_kernel and independent and ker_dim == len(im_vectors) + len(evens)
    im_basis = tuple(
        Cycle.of({basis[j]: 1 for j in gf2.bits(v)}, twist, tr, mod2=True)
        for v in sorted(im_vectors, reverse=True)
    )
    return KerImSplit(degree, im_basis, tuple(evens), ker_dim, verified)


def _components_upto(tr, twist, degree):
    return irredundant_components(tr, twist, max(degree, 0))


def ker_sq2_basis(tr: Optional[Truncation], twist: Twist, degree: int) -> List[Cycle]:
    """Mod-2 kernel basis built component by component."""
    twist = _twist_of(twist)
    out = []
    for root in sorted(_components_upto(tr, twist, degree), key=lambda s: (sum(s), shape_key(s))):
        t = Tableau(root, twist)
        if classify(t, tr).full:
            if sum(root) == degree:
                out.append(Cycle.sigma(root, twist, tr, mod2=True))
            continue
        for eta in eta_indices(t, tr):
            if sum(eta) + 1 == degree:
                out.append(sq2(Cycle.sigma(eta, twist, tr, mod2=True)))
    return out


def ker_sq2_pi_basis(tr: Optional[Truncation], twist: Twist, degree: int) -> List[Cycle]:
    """Integral basis of the preimage of Ker(Sq²) under reduction mod 2."""
    twist = _twist_of(twist)
    out = []
    for root in sorted(_components_upto(tr, twist, degree), key=lambda s: (sum(s), shape_key(s))):
        t = Tableau(root, twist)
        if classify(t, tr).full:
            if sum(root) == degree:
                out.append(Cycle.sigma(root, twist, tr))
            continue
        for eta in eta_indices(t, tr):
            if sum(eta) + 1 == degree:
                out.append(sq2(Cycle.sigma(eta, twist, tr)))
            if sum(eta) == degree:
                out.append(Cycle.sigma(eta, twist, tr).scale(2))
    return out


def lattice_equal(a: Iterable[Cycle], b: Iterable[Cycle], degree: int,
                  tr: Optional[Truncation] = None) -> bool:
    a, b = list(a), list(b)
    if tr is None:
        for c in a + b:
            if c.truncation is not None:
                tr = c.truncation
                break
    basis = shapes_of_degree(tr, degree)
    return lattice.same_lattice([c.vector(basis) for c in a], [c.vector(basis) for c in b])


# -- doubling and the Giambelli witness ------------------------------------


def doubling_source(k: int, n: int) -> Truncation:
    """Grassmannian whose Chow group doubles onto the even tableaux of Gr(k,n)."""
    if (k * (n - k)) % 2 == 0:
        return Truncation(k // 2, n // 2)
    return Truncation(k // 2, n // 2 - 1)


def double_shape(shape: Shape) -> Shape:
    return tuple(x for a in shape for x in (2 * a, 2 * a))


def hook_double_shape(shape: Shape, k: int, n: int) -> Shape:
    """(n-k, 1^(k-1)) with the doubled shape added below the first row."""
    doubled = double_shape(shape)
    rows = [n - k] + [1] * (k - 1)
    for i, a in enumerate(doubled):
        rows[i + 1] += a
    return tuple(rows)


def doubling(c: Cycle, target: Optional[Truncation] = None) -> Cycle:
    """γ: σ_{a1,a2,..} ↦ σ_{2a1,2a1,2a2,2a2,..}."""
    if c.mod2 or c.twist is not Twist.UNTWISTED:
        raise CycleError("doubling acts on integral untwisted cycles")
    return Cycle.of({double_shape(s): v for s, v in c.terms}, Twist.UNTWISTED, target)


def doubling_check(k: int, n: int) -> bool:
    """Even untwisted tableaux of Gr(k,n) are exactly γ(source) plus, for odd
    k(n-k), the hook-times-γ family; γ is injective on shapes."""
    tr = Truncation(k, n)
    src = doubling_source(k, n)
    expected = {}
    for d in range(src.k * src.width + 1):
        for s in shapes_of_degree(src, d):
            img = double_shape(s)
            expected.setdefault(4 * d, []).append(img)
            if (k * (n - k)) % 2:
                expected.setdefault(4 * d + n - 1, []).append(hook_double_shape(s, k, n))
    for d in range(k * (n - k) + 1):
        got = sorted(even_shapes(tr, Twist.UNTWISTED, d))
        want = expected.get(d, [])
        if len(set(want)) != len(want) or sorted(want) != got:
            return False
    return True


def giambelli_witness(j: int) -> Cycle:
    return Cycle.of({(4 * j - 1 - 2 * m, 2 * m) if m else (4 * j - 1,): 1 for m in range(j)}, mod2=True)


def giambelli_identity_check(j: int) -> bool:
    """σ_{2j}² = γ(σ_j) + Sq²(σ_{4j-1} + σ_{4j-3,2} + ... ) mod 2, untruncated."""
    if j < 1:
        raise CycleError("j must be positive")
    s = Cycle.sigma((2 * j,), mod2=True)
    lhs = product(s, s)
    rhs = Cycle.sigma((2 * j, 2 * j), mod2=True) + sq2(giambelli_witness(j))
    return lhs == rhs
