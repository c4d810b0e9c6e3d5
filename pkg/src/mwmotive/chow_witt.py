"""Additive Chow-Witt bases of Grassmannians and η-class arithmetic.

GW, W and I coefficients are carried as labels only.  Everything checkable
is phrased through γ-images (integral Schubert cycles) and ranks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import reference_tables
from .schubert import (
    Cycle,
    CycleError,
    e_dimension,
    even_shapes,
    im_dimension,
    ker_dimension,
    ker_sq2_pi_basis,
    lattice_equal,
    product,
    sq2,
)
from .tableau import (
    Shape,
    Tableau,
    TableauError,
    Truncation,
    Twist,
    add_boxes,
    classify,
    eta_indices,
    irredundant_components,
    is_completely_even,
    shape_key,
    shapes_of_degree,
)


class ChowWittError(ValueError):
    pass


@dataclass(frozen=True)
class EtaClass:
    """A pair (a, b) of integral cycles with Sq²(a) ≡ b mod 2."""

    a: Cycle
    b: Cycle

    def __post_init__(self):
        if self.a.mod2 or self.b.mod2:
            raise ChowWittError("η-classes have integral components")
        if (self.a.twist, self.a.truncation) != (self.b.twist, self.b.truncation):
            raise ChowWittError("components live over different twists or truncations")
        if sq2(self.a).reduce() != self.b.reduce():
            raise ChowWittError(f"Sq²({self.a}) is not {self.b} mod 2")

    @property
    def twist(self) -> Twist:
        return self.a.twist

    @property
    def truncation(self) -> Optional[Truncation]:
        return self.a.truncation

    @classmethod
    def one(cls, truncation: Optional[Truncation] = None) -> "EtaClass":
        return cls(Cycle.sigma((), truncation=truncation), Cycle.zero(truncation=truncation))

    def __mul__(self, other: "EtaClass") -> "EtaClass":
        return eta_mul(self, other)

    def __add__(self, other: "EtaClass") -> "EtaClass":
        return EtaClass(self.a + other.a, self.b + other.b)

    def to_json(self) -> dict:
        return {"a": self.a.to_json(), "b": self.b.to_json()}


def eta_mul(u: EtaClass, v: EtaClass) -> EtaClass:
    """(a, b)·(c, d) = (ac, bc + ad)."""
    if u.truncation != v.truncation:
        raise ChowWittError("η-classes over different truncations")
    try:
        ac = product(u.a, v.a)
        bc = product(u.b, v.a)
        ad = product(u.a, v.b)
    except CycleError as exc:
        raise ChowWittError(str(exc)) from exc
    return EtaClass(ac, bc + ad)


def eta_class_of(t: Tableau, tr: Optional[Truncation], subset: Sequence[int] = ()) -> EtaClass:
    """(Λ_S, Sq²(Λ_S)) for Λ irredundant and not full, S with smallest index > 1."""
    cls = classify(t, tr)
    if cls.even:
        raise ChowWittError(f"{t.shape} is even; it carries no η-class")
    if not cls.irredundant:
        raise ChowWittError(f"{t.shape} is not irredundant")
    subset = list(subset)
    if subset and subset[0] <= 1:
        raise ChowWittError("η-index subsets must avoid position 1")
    try:
        shape = add_boxes(t, tr, subset).shape
    except TableauError as exc:
        raise ChowWittError(str(exc)) from exc
    a = Cycle.sigma(shape, t.twist, tr)
    return EtaClass(a, sq2(a))


# -- bases ---------------------------------------------------------------------

GW_EVEN = "gw_even"
Z_H = "z_h"
Z_PARTIAL = "z_partial"


@dataclass(frozen=True)
class GeneratorTag:
    kind: str
    degree: int
    gamma_image: Cycle
    source: Shape
    meta: Tuple[Tuple[str, str], ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        out = {
            "tag": self.kind,
            "source": list(self.source),
            "gamma_image": self.gamma_image.to_json(),
        }
        out.update(dict(self.meta))
        return out


def _witt_symbol(shape: Shape, k: int, n: int, twist: Twist) -> str:
    """Name of the Witt-cohomology class lifted by an even tableau."""

    def half(s):
        return "(" + ",".join(str(x // 2) for x in s[::2]) + ")"

    if twist is Twist.UNTWISTED:
        if is_completely_even(shape):
            return f"γ{half(shape)}"
        inner = tuple(x - 1 for x in shape[1:] if x > 1)
        return f"R·γ{half(inner)}"
    if shape and shape[0] == n - k and is_completely_even(shape[1:]):
        return f"e⊥·γ{half(shape[1:])}"
    inner = tuple(x - 1 for x in shape if x > 1)
    return f"e·γ{half(inner)}"


@dataclass(frozen=True)
class DegreeRow:
    d: int
    gw: Tuple[GeneratorTag, ...]
    z: Tuple[GeneratorTag, ...]

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "gw": [list(g.source) for g in self.gw],
            "z": [{"tag": g.kind, "gamma_image": g.gamma_image.to_json()} for g in self.z],
        }


@dataclass(frozen=True)
class BasisTable:
    k: int
    n: int
    twist: Twist
    degrees: Tuple[DegreeRow, ...]

    def row(self, d: int) -> DegreeRow:
        return self.degrees[d]

    def gw_shapes(self) -> List[Shape]:
        return [g.source for r in self.degrees for g in r.gw]

    def z_images(self, d: Optional[int] = None) -> List[Cycle]:
        rows = self.degrees if d is None else [self.degrees[d]]
        return [g.gamma_image for r in rows for g in r.z]

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "twist": self.twist.name.lower(),
            "degrees": [r.to_json() for r in self.degrees],
        }

    def to_markdown(self) -> str:
        name = f"Gr({self.k},{self.n})" + (", O(1)" if self.twist is Twist.TWISTED else "")
        lines = [f"### CH~ of {name}", "", "| d | GW | Z |", "|---|---|---|"]
        for r in self.degrees:
            gw = ", ".join(str(g.gamma_image) for g in r.gw)
            z = ", ".join(str(g.gamma_image) for g in r.z)
            lines.append(f"| {r.d} | {gw} | {z} |")
        return "\n".join(lines) + "\n"


def eta_index_table(tr: Truncation, twist: Twist) -> List[Shape]:
    """All η-indices of all irredundant non-full tableaux."""
    out = []
    for root in irredundant_components(tr, twist):
        t = Tableau(root, twist)
        if not classify(t, tr).full:
            out.extend(eta_indices(t, tr))
    return out


def chow_witt_basis(k: int, n: int, twist: Twist = Twist.UNTWISTED) -> BasisTable:
    tr = Truncation(k, n)
    top = k * (n - k)
    gw: Dict[int, List[GeneratorTag]] = {d: [] for d in range(top + 1)}
    z: Dict[int, List[GeneratorTag]] = {d: [] for d in range(top + 1)}
    for d in range(top + 1):
        for s in even_shapes(tr, twist, d):
            meta = (("witt_symbol", _witt_symbol(s, k, n, twist)),)
            gw[d].append(GeneratorTag(GW_EVEN, d, Cycle.sigma(s, twist, tr), s, meta))
    for eta in sorted(eta_index_table(tr, twist), key=lambda s: (sum(s), shape_key(s))):
        x = Cycle.sigma(eta, twist, tr)
        y = sq2(x)
        d = sum(eta)
        z[d].append(GeneratorTag(Z_H, d, x.scale(2), eta))
        z[d + 1].append(GeneratorTag(Z_PARTIAL, d + 1, y, eta))
    rows = tuple(
        DegreeRow(d, tuple(gw[d]), tuple(sorted(z[d], key=lambda g: (g.kind != Z_H, shape_key(g.source)))))
        for d in range(top + 1)
    )
    return BasisTable(k, n, twist, rows)


def gamma_lattice_check(k: int, n: int, twist: Twist) -> bool:
    """Even tableaux plus z-images span the integral Ker(Sq²∘π) lattice per degree."""
    tr = Truncation(k, n)
    table = chow_witt_basis(k, n, twist)
    for r in table.degrees:
        ours = [g.gamma_image for g in r.gw + r.z]
        if not lattice_equal(ours, ker_sq2_pi_basis(tr, twist, r.d), r.d, tr):
            return False
    return True


@dataclass(frozen=True)
class RankRow:
    d: int
    gw_rank: int
    z_rank: int
    e_dim: int
    ker_dim: int
    im_dim: int
    eta_indices: int
    consistent: bool

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "gw_rank": self.gw_rank,
            "z_rank": self.z_rank,
            "e_dim": self.e_dim,
            "ker_dim": self.ker_dim,
            "im_dim": self.im_dim,
            "eta_indices": self.eta_indices,
            "consistent": self.consistent,
        }


def rank_report(k: int, n: int, twist: Twist = Twist.UNTWISTED) -> List[RankRow]:
    tr = Truncation(k, n)
    table = chow_witt_basis(k, n, twist)
    etas = eta_index_table(tr, twist)
    per_degree = [0] * (k * (n - k) + 2)
    for s in etas:
        per_degree[sum(s)] += 1
    rows = []
    for r in table.degrees:
        d = r.d
        gw_rank, e_dim = len(r.gw), e_dimension(tr, twist, d)
        ker, im = ker_dimension(tr, twist, d), im_dimension(tr, twist, d)
        prev = per_degree[d - 1] if d else 0
        consistent = (
            gw_rank == e_dim == len(even_shapes(tr, twist, d))
            and im == prev
            and ker == gw_rank + im
            and len(r.z) == per_degree[d] + prev
        )
        rows.append(RankRow(d, gw_rank, len(r.z), e_dim, ker, im, per_degree[d], consistent))
    return rows


def rank_identity(k: int, n: int, twist: Twist) -> bool:
    """Σ gw + 2·#η-indices = number of tableaux."""
    tr = Truncation(k, n)
    total = sum(len(shapes_of_degree(tr, d)) for d in range(k * (n - k) + 1))
    rows = rank_report(k, n, twist)
    return sum(r.gw_rank for r in rows) + 2 * sum(r.eta_indices for r in rows) == total


def reference_comparison(k: int, n: int, twist: Twist) -> Dict[str, bool]:
    """Compare against the published table: GW as sets, Z columns as lattices."""
    ref = reference_tables.REFERENCE[(k, n, twist is Twist.TWISTED)]
    tr = Truncation(k, n)
    table = chow_witt_basis(k, n, twist)
    gw_ok = sorted(table.gw_shapes()) == sorted(ref["gw"])
    ref_z = [Cycle.of(e, twist, tr) for e in ref["z"]]
    by_degree: Dict[int, List[Cycle]] = {}
    for c in ref_z:
        if c.degree is None:
            return {"gw": gw_ok, "z": False}
        by_degree.setdefault(c.degree, []).append(c)
    z_ok = all(
        lattice_equal(table.z_images(r.d), by_degree.get(r.d, []), r.d, tr) for r in table.degrees
    )
    return {"gw": gw_ok, "z": z_ok and len(ref_z) == len(table.z_images())}
