"""Split MW-motives of Grassmannians and complete flags over a point.

A split motive is a multiset of unit summands Z((i)) and η-cones Z/η((i)).
Each unit adds one to the Chow rank in weight i; each η-cone adds one in
weights i and i+1.  Twisted Grassmannians stand for the Thom space of
O(1) and carry a +1 weight shift.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .tableau import (
    Tableau,
    Truncation,
    Twist,
    classify,
    eta_indices,
    irredundant_components,
    max_degree_of,
    shapes_of_degree,
)

UNIT = "unit"
ETA = "eta_cone"


class MotiveError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Summand:
    kind: str
    weight: int

    def __post_init__(self):
        if self.kind not in (UNIT, ETA):
            raise MotiveError(f"unknown summand kind {self.kind!r}")
        if self.weight < 0:
            raise MotiveError("summand weights are nonnegative")

    def shifted(self, by: int) -> "Summand":
        return Summand(self.kind, self.weight + by)

    def __str__(self):
        return f"Z(({self.weight}))" if self.kind == UNIT else f"Z/η(({self.weight}))"


@dataclass(frozen=True)
class CountVectors:
    s: Tuple[int, ...]
    w: Tuple[int, ...]
    t: Tuple[int, ...]

    def cell_identity(self) -> bool:
        """s_j = w_j + t_j + t_{j-1} in every weight."""
        return all(
            self.s[j] == self.w[j] + self.t[j] + (self.t[j - 1] if j else 0)
            for j in range(len(self.s))
        )

    def to_json(self) -> dict:
        return {"s": list(self.s), "w": list(self.w), "t": list(self.t)}


def _multiset(summands) -> Tuple[Summand, ...]:
    return tuple(sorted(summands, key=lambda x: (x.weight, x.kind != UNIT)))


@dataclass(frozen=True)
class MotiveDecomposition:
    object: str
    summands: Tuple[Summand, ...]
    chow_ranks: Tuple[int, ...]
    twist: Optional[Twist] = None
    shift: int = 0
    label: str = ""
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def length(self) -> int:
        top = max([x.weight + (1 if x.kind == ETA else 0) for x in self.summands], default=-1)
        return max(top + 1, len(self.chow_ranks))

    def _vector(self, kind: str) -> Tuple[int, ...]:
        out = [0] * self.length
        for x in self.summands:
            if x.kind == kind:
                out[x.weight] += 1
        return tuple(out)

    @property
    def w(self) -> Tuple[int, ...]:
        return self._vector(UNIT)

    @property
    def t(self) -> Tuple[int, ...]:
        return self._vector(ETA)

    @property
    def s(self) -> Tuple[int, ...]:
        return tuple(self.chow_ranks) + (0,) * (self.length - len(self.chow_ranks))

    def counts(self) -> CountVectors:
        return CountVectors(self.s, self.w, self.t)

    def chow_rank(self, j: int) -> int:
        w, t = self.w, self.t
        get = lambda v, i: v[i] if 0 <= i < len(v) else 0
        return get(w, j) + get(t, j) + get(t, j - 1)

    def unshifted(self) -> Tuple[Summand, ...]:
        return tuple(x.shifted(-self.shift) for x in self.summands)

    def to_json(self) -> dict:
        grouped = Counter(self.summands)
        out = {
            "object": self.object,
            "twist": None if self.twist is None else self.twist.name.lower(),
            "summands": [
                {"kind": x.kind, "weight": x.weight, "count": grouped[x]}
                for x in _multiset(grouped)
            ],
            "witt_weights": sorted(witt_weights(self)),
            "counts": self.counts().to_json(),
        }
        if self.shift:
            out["thom_shift"] = self.shift
            unshifted = Counter(self.unshifted())
            out["unshifted_summands"] = [
                {"kind": x.kind, "weight": x.weight, "count": unshifted[x]}
                for x in _multiset(unshifted)
            ]
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def __str__(self) -> str:
        if not self.summands:
            return "0"
        return " ⊕ ".join(str(x) for x in self.summands)


def witt_weights(d: MotiveDecomposition) -> set:
    return {x.weight for x in d.summands if x.kind == UNIT}


def _check_kn(k: int, n: int) -> Truncation:
    if not (isinstance(k, int) and isinstance(n, int)):
        raise MotiveError("k and n must be integers")
    if not 0 <= k <= n:
        raise MotiveError(f"need 0 <= k <= n, got k={k}, n={n}")
    return Truncation(k, n)


def grassmannian_counts(k: int, n: int) -> Tuple[int, ...]:
    tr = _check_kn(k, n)
    return tuple(len(shapes_of_degree(tr, d)) for d in range(max_degree_of(tr) + 1))


def grassmannian_summands(k: int, n: int, twist: Twist) -> List[Summand]:
    """Summands at X-level weights (no Thom shift)."""
    tr = _check_kn(k, n)
    out = []
    for root in irredundant_components(tr, twist):
        t = Tableau(root, twist)
        if classify(t, tr).full:
            out.append(Summand(UNIT, sum(root)))
        else:
            out.extend(Summand(ETA, sum(s)) for s in eta_indices(t, tr))
    return out


def decompose_grassmannian(k: int, n: int, twist: Twist = Twist.UNTWISTED) -> MotiveDecomposition:
    """Z(Gr(k,n)) when untwisted, Th(O(1)) on Gr(k,n) when twisted."""
    twist = twist if isinstance(twist, Twist) else Twist.of(bool(twist))
    shift = 1 if twist is Twist.TWISTED else 0
    summands = [x.shifted(shift) for x in grassmannian_summands(k, n, twist)]
    ranks = (0,) * shift + grassmannian_counts(k, n)
    name = f"Gr({k},{n})" if not shift else f"Th(O(1) on Gr({k},{n}))"
    return MotiveDecomposition(
        object=name,
        summands=_multiset(summands),
        chow_ranks=ranks,
        twist=twist,
        shift=shift,
        label="units at even tableaux, η-cones at η-indices of irredundant non-full tableaux",
    )


# -- Witt-weight containments -----------------------------------------------


@dataclass(frozen=True)
class WittConstraint:
    item: int
    residues: Tuple[int, ...]  # allowed classes mod 4; empty means WW = ∅

    def holds(self, weights) -> bool:
        return all(w % 4 in self.residues for w in weights)


def witt_constraints(k: int, n: int, twist: Twist) -> List[WittConstraint]:
    _check_kn(k, n)
    out = []
    if twist is Twist.TWISTED:
        if k % 2 == 1 and n % 2 == 0:
            out.append(WittConstraint(1, ()))
        if (n - k) % 2 == 0:
            res = {(n - k + 1) % 4}
            if k % 2 == 0:
                res.add((k + 1) % 4)
            out.append(WittConstraint(2, tuple(sorted(res))))
        if k % 2 == 0 and n % 2 == 1:
            out.append(WittConstraint(3, ((k + 1) % 4,)))
    else:
        if (n - k) % 2 == 1:
            res = {0} if k % 2 == 0 else {0, (n - 1) % 4}
            out.append(WittConstraint(4, tuple(sorted(res))))
        else:
            out.append(WittConstraint(5, (0,)))
    return out


def witt_check(k: int, n: int, twist: Twist) -> bool:
    ww = witt_weights(decompose_grassmannian(k, n, twist))
    return all(c.holds(ww) for c in witt_constraints(k, n, twist))


def projective_witt_weights(n: int) -> set:
    """Witt weights of P^n."""
    return {0, n} if n % 2 else {0}


# -- counts -------------------------------------------------------------------


def eta_from_counts(s: Sequence[int], w: Sequence[int]) -> Tuple[int, ...]:
    """t_j = Σ_{i≤j} (-1)^i (s_{j-i} - w_{j-i})."""
    size = max(len(s), len(w))
    get = lambda v, i: v[i] if i < len(v) else 0
    diff = [get(s, j) - get(w, j) for j in range(size)]
    t = []
    for j in range(size):
        t.append(sum((-1) ** i * diff[j - i] for i in range(j + 1)))
    if any(x < 0 for x in t):
        raise MotiveError(f"counts s={list(s)}, w={list(w)} give a negative η-count: {t}")
    return tuple(t)


@dataclass(frozen=True)
class RealizationRow:
    degree: int
    free_rank: int
    torsion_rank: int
    chow_rank: int
    consistent: bool

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "free_rank": self.free_rank,
            "torsion_rank": self.torsion_rank,
            "chow_rank": self.chow_rank,
            "consistent": self.consistent,
        }


def realization_report(k: int, n: int) -> List[RealizationRow]:
    """Real-points free rank w_i, 2-torsion rank t_{i-1}, Chow rank s_i."""
    return realization_rows(decompose_grassmannian(k, n, Twist.UNTWISTED))


def realization_rows(d: MotiveDecomposition) -> List[RealizationRow]:
    c = d.counts()
    rows = []
    for i in range(len(c.s)):
        tprev = c.t[i - 1] if i else 0
        rows.append(RealizationRow(i, c.w[i], tprev, c.s[i], c.s[i] == c.w[i] + c.t[i] + tprev))
    return rows


# -- recursions -------------------------------------------------------------------


def _grass(k: int, n: int, twist: Twist) -> Counter:
    if k < 0 or n < 0 or k > n:
        return Counter()
    return Counter(decompose_grassmannian(k, n, twist).summands)


def _th(k, n) -> Counter:
    return _grass(k, n, Twist.TWISTED)


def _z(k, n) -> Counter:
    return _grass(k, n, Twist.UNTWISTED)


def _shift(c: Counter, by: int) -> Counter:
    return Counter({x.shifted(by): m for x, m in c.items()})


def _mod_eta(k: int, n: int, by: int) -> Counter:
    """Z(Gr(k,n)) ⊗ Z/η((by)): one η-cone per tableau."""
    if k < 0 or n < 0 or k > n:
        return Counter()
    out = Counter()
    for d, count in enumerate(grassmannian_counts(k, n)):
        out[Summand(ETA, d + by)] += count
    return out


def recursion_items(k: int, n: int, twist: Twist) -> Dict[int, bool]:
    """Applicable recursions for Th (twisted) or Z (untwisted), item -> holds."""
    _check_kn(k, n)
    out = {}
    if twist is Twist.TWISTED:
        lhs = _th(k, n)
        if k % 2 == 1 and n % 2 == 0:
            rhs = _shift(_th(k - 2, n - 2), 2 * n - 2 * k) + _th(k, n - 2) + _mod_eta(k - 1, n - 2, n - k)
            out[1] = lhs == rhs
        if (n - k) % 2 == 0 and n >= 1:
            out[2] = lhs == _th(k, n - 1) + _shift(_z(k - 1, n - 1), n - k + 1)
        if k % 2 == 0 and n % 2 == 1:
            out[3] = lhs == _th(k - 1, n - 1) + _shift(_z(k, n - 1), k + 1)
    else:
        lhs = _z(k, n)
        if (n - k) % 2 == 1:
            out[4] = lhs == _z(k, n - 1) + _shift(_th(k - 1, n - 1), n - k - 1)
        elif k >= 1:
            out[5] = lhs == _z(k - 1, n - 1) + _shift(_th(k, n - 1), k - 1)
    return out


def recursion_check(k: int, n: int, twist: Twist = Twist.UNTWISTED) -> bool:
    return all(recursion_items(k, n, twist).values())


# -- complete flags ------------------------------------------------------------


def flag_generator_degrees(n: int) -> List[int]:
    if n < 1:
        raise MotiveError("flag varieties need n >= 1")
    half = n // 2
    return [n - 1 if (n % 2 == 0 and a == half) else 4 * a - 1 for a in range(1, half + 1)]


def mahonian(n: int) -> Tuple[int, ...]:
    """Coefficients of Π_{i=1..n} (1 + q + ... + q^(i-1))."""
    poly = [1]
    for i in range(1, n + 1):
        nxt = [0] * (len(poly) + i - 1)
        for j, c in enumerate(poly):
            for e in range(i):
                nxt[j + e] += c
        poly = nxt
    return tuple(poly)


def flag_motive(n: int) -> MotiveDecomposition:
    degs = flag_generator_degrees(n)
    units = [
        Summand(UNIT, sum(subset))
        for size in range(len(degs) + 1)
        for subset in combinations(degs, size)
    ]
    s = mahonian(n)
    w = [0] * len(s)
    for u in units:
        w[u.weight] += 1
    t = eta_from_counts(s, w)
    etas = [Summand(ETA, j) for j, m in enumerate(t) for _ in range(m)]
    return MotiveDecomposition(
        object=f"Fl({n})",
        summands=_multiset(units + etas),
        chow_ranks=s,
        label="units over subsets of generator degrees, η-cones from Chow ranks",
        notes=("the empty subset contributes the unit summand Z((0))",),
    )
