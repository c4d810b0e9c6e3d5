"""Named verification suites, shared by the CLI and the test-suite."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from . import chow_witt, flag, gf2, lattice, motive, schubert, symfunc
from .schubert import Cycle
from .tableau import (
    Tableau,
    Truncation,
    Twist,
    add_boxes,
    addable_positions,
    classify,
    closure,
    even_closed_form,
    irredundant_components,
    max_degree_of,
    partitions,
    shapes_of_degree,
)

TWISTS = (Twist.UNTWISTED, Twist.TWISTED)
SCOPES = ("tableau", "schubert", "motive", "chow-witt", "symfunc", "flag")


@dataclass
class CheckResult:
    scope: str
    name: str
    cases: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, ok: bool, label) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(str(label))

    def to_json(self) -> dict:
        return {
            "scope": self.scope,
            "name": self.name,
            "passed": self.passed,
            "cases": self.cases,
            "failures": self.failures[:20],
        }


@dataclass(frozen=True)
class Bounds:
    max_n: int = 8
    max_degree: int = 10
    seed: int = 0


def grassmannians(max_n: int) -> Iterator[Tuple[int, int]]:
    for n in range(max_n + 1):
        for k in range(n + 1):
            yield k, n


# -- tableau ----------------------------------------------------------------


def check_closed_form(b: Bounds, r: CheckResult):
    for k, n in grassmannians(b.max_n):
        tr = Truncation(k, n)
        for tw in TWISTS:
            for d in range(max_degree_of(tr) + 1):
                for s in shapes_of_degree(tr, d):
                    t = Tableau(s, tw)
                    r.expect(even_closed_form(t, tr) == classify(t, tr).even, (k, n, tw.name, s))


def check_closures(b: Bounds, r: CheckResult):
    for k, n in grassmannians(b.max_n):
        tr = Truncation(k, n)
        for tw in TWISTS:
            for d in range(max_degree_of(tr) + 1):
                for s in shapes_of_degree(tr, d):
                    t = Tableau(s, tw)
                    m = len(addable_positions(t, tr))
                    subsets = [
                        add_boxes(t, tr, [p for p in range(1, m + 1) if mask >> (p - 1) & 1]).shape
                        for mask in range(2 ** m)
                    ]
                    cl = closure(t, tr)
                    r.expect(len(cl) == 2 ** m and set(subsets) == cl and len(set(subsets)) == 2 ** m,
                             (k, n, tw.name, s))


def check_components(b: Bounds, r: CheckResult):
    for k, n in grassmannians(b.max_n):
        tr = Truncation(k, n)
        for tw in TWISTS:
            comps = irredundant_components(tr, tw)
            seen = [s for c in comps.values() for s in c]
            every = [s for d in range(max_degree_of(tr) + 1) for s in shapes_of_degree(tr, d)]
            roots_ok = all(
                sum(1 for s in c if classify(Tableau(s, tw), tr).irredundant) == 1
                for c in comps.values()
            )
            r.expect(sorted(seen) == sorted(every) and roots_ok, (k, n, tw.name))


def gaussian_binomial(k: int, n: int) -> List[int]:
    """Coefficients of [n choose k]_q via the q-Pascal rule."""
    if k < 0 or k > n:
        return [0]
    table: Dict[Tuple[int, int], List[int]] = {}

    def g(k, n):
        if k == 0 or k == n:
            return [1]
        if (k, n) not in table:
            a = g(k - 1, n - 1)
            c = [0] * k + g(k, n - 1)
            size = max(len(a), len(c))
            table[(k, n)] = [(a[i] if i < len(a) else 0) + (c[i] if i < len(c) else 0) for i in range(size)]
        return table[(k, n)]

    return g(k, n)


def check_gaussian(b: Bounds, r: CheckResult):
    for k, n in grassmannians(b.max_n):
        r.expect(list(motive.grassmannian_counts(k, n)) == gaussian_binomial(k, n), (k, n))


# -- schubert -------------------------------------------------------------------


def check_sq2_squared(b: Bounds, r: CheckResult):
    for k, n in grassmannians(b.max_n):
        tr = Truncation(k, n)
        for tw in TWISTS:
            for d in range(max_degree_of(tr) - 1):
                first = schubert.sq2_matrix(tr, tw, d).columns
                second = schubert.sq2_matrix(tr, tw, d + 1).columns
                r.expect(all(gf2.combine(second, v) == 0 for v in first), (k, n, tw.name, d))


def check_ker_im(b: Bounds, r: CheckResult):
    for k, n in grassmannians(b.max_n):
        tr = Truncation(k, n)
        for tw in TWISTS:
            for d in range(max_degree_of(tr) + 1):
                split = schubert.ker_im_split(tr, tw, d)
                evens = len(schubert.even_shapes(tr, tw, d))
                ok = split.verified and schubert.e_dimension(tr, tw, d) == evens
                r.expect(ok, (k, n, tw.name, d))


def check_mod2_kernel_basis(b: Bounds, r: CheckResult):
    for k, n in grassmannians(b.max_n):
        tr = Truncation(k, n)
        for tw in TWISTS:
            for d in range(max_degree_of(tr) + 1):
                basis = shapes_of_degree(tr, d)
                vecs = [c.bitvector(basis) for c in schubert.ker_sq2_basis(tr, tw, d)]
                m = schubert.sq2_matrix(tr, tw, d)
                in_kernel = all(gf2.combine(m.columns, v) == 0 for v in vecs)
                ok = in_kernel and gf2.rank(vecs) == len(vecs) == len(basis) - m.rank
                r.expect(ok, (k, n, tw.name, d))


def check_pi_lattice(b: Bounds, r: CheckResult):
    for k, n in grassmannians(b.max_n):
        tr = Truncation(k, n)
        for tw in TWISTS:
            for d in range(max_degree_of(tr) + 1):
                basis = shapes_of_degree(tr, d)
                vecs = [c.vector(basis) for c in schubert.ker_sq2_pi_basis(tr, tw, d)]
                rank = schubert.sq2_matrix(tr, tw, d).rank
                ok = (
                    len(vecs) == len(basis)
                    and lattice.lattice_rank(vecs) == len(basis)
                    and lattice.index_of(vecs) == 2 ** rank
                ) if basis else not vecs
                r.expect(ok, (k, n, tw.name, d))


def check_truncation(b: Bounds, r: CheckResult):
    bound = min(b.max_n, 6)
    for k, n in grassmannians(bound):
        tr = Truncation(k, n)
        for tw in TWISTS:
            for d in range(min(max_degree_of(tr), 5) + 1):
                for s in partitions(d):
                    c = Cycle.sigma(s, tw)
                    lhs = schubert.truncate(schubert.sq2(c), tr)
                    rhs = schubert.sq2(schubert.truncate(c, tr))
                    r.expect(lhs == rhs, ("sq2", k, n, tw.name, s))
        for d1 in range(3):
            for d2 in range(3):
                for s1 in partitions(d1):
                    for s2 in partitions(d2):
                        a, c = Cycle.sigma(s1), Cycle.sigma(s2)
                        lhs = schubert.truncate(a * c, tr)
                        rhs = schubert.truncate(a, tr) * schubert.truncate(c, tr)
                        r.expect(lhs == rhs, ("product", k, n, s1, s2))


def check_doubling(b: Bounds, r: CheckResult):
    for k, n in grassmannians(b.max_n):
        r.expect(schubert.doubling_check(k, n), (k, n))


def check_giambelli(b: Bounds, r: CheckResult):
    for j in (1, 2, 3):
        r.expect(schubert.giambelli_identity_check(j), j)


def check_product_algebra(b: Bounds, r: CheckResult):
    rng = random.Random(b.seed)
    shapes = [s for d in range(4) for s in partitions(d)]

    def rand_cycle():
        return Cycle.of({rng.choice(shapes): rng.randint(-3, 3) for _ in range(2)})

    for _ in range(25):
        x, y, z = rand_cycle(), rand_cycle(), rand_cycle()
        r.expect(x * y == y * x, ("commutative", x, y))
        r.expect((x * y) * z == x * (y * z), ("associative", x, y, z))


# -- motive -------------------------------------------------------------------


def check_motive_counts(b: Bounds, r: CheckResult):
    for k, n in grassmannians(b.max_n):
        for tw in TWISTS:
            d = motive.decompose_grassmannian(k, n, tw)
            c = d.counts()
            label = (k, n, tw.name)
            r.expect(all(d.chow_rank(j) == c.s[j] for j in range(len(c.s))), ("chow_rank",) + label)
            r.expect(motive.eta_from_counts(c.s, c.w) == c.t, ("eta_from_counts",) + label)
            r.expect(c.cell_identity(), ("cell",) + label)


def check_witt(b: Bounds, r: CheckResult):
    for k, n in grassmannians(b.max_n):
        for tw in TWISTS:
            r.expect(motive.witt_check(k, n, tw), (k, n, tw.name))
    for n in range(1, b.max_n):
        ww = motive.witt_weights(motive.decompose_grassmannian(1, n + 1))
        r.expect(ww == motive.projective_witt_weights(n), ("P", n))


def check_recursions(b: Bounds, r: CheckResult):
    for k, n in grassmannians(b.max_n):
        for tw in TWISTS:
            for item, ok in motive.recursion_items(k, n, tw).items():
                r.expect(ok, (item, k, n, tw.name))


def check_component_multiplicity(b: Bounds, r: CheckResult):
    from .tableau import eta_indices

    for k, n in grassmannians(b.max_n):
        tr = Truncation(k, n)
        for tw in TWISTS:
            for root in irredundant_components(tr, tw):
                t = Tableau(root, tw)
                if classify(t, tr).full:
                    continue
                m = len(addable_positions(t, tr))
                r.expect(len(eta_indices(t, tr)) == 2 ** (m - 1), (k, n, tw.name, root))


def check_flag_motive(b: Bounds, r: CheckResult):
    for n in range(1, b.max_n + 1):
        f = motive.flag_motive(n)
        units = sorted(x.weight for x in f.summands if x.kind == motive.UNIT)
        top = n * (n - 1) // 2
        ok = (
            units[-1] == top
            and units.count(top) == 1
            and len(units) == 2 ** (n // 2)
            and f.counts().cell_identity()
        )
        r.expect(ok, n)


# -- chow-witt ------------------------------------------------------------------


def check_reference_tables(b: Bounds, r: CheckResult):
    for k, n in ((2, 4), (3, 6)):
        for tw in TWISTS:
            res = chow_witt.reference_comparison(k, n, tw)
            r.expect(res["gw"], ("gw", k, n, tw.name))
            r.expect(res["z"], ("z", k, n, tw.name))


def check_gamma_lattice(b: Bounds, r: CheckResult):
    for k, n in grassmannians(b.max_n):
        for tw in TWISTS:
            r.expect(chow_witt.gamma_lattice_check(k, n, tw), (k, n, tw.name))


def check_rank_report(b: Bounds, r: CheckResult):
    for k, n in grassmannians(b.max_n):
        for tw in TWISTS:
            rows = chow_witt.rank_report(k, n, tw)
            ok = all(x.consistent for x in rows) and chow_witt.rank_identity(k, n, tw)
            dec = motive.decompose_grassmannian(k, n, tw)
            shift = dec.shift
            w = [x.gw_rank for x in rows]
            t = [x.eta_indices for x in rows]
            ok = ok and list(dec.w[shift:shift + len(w)]) == w and list(dec.t[shift:shift + len(t)]) == t
            r.expect(ok, (k, n, tw.name))


def random_eta_class(rng: random.Random, tr: Truncation) -> chow_witt.EtaClass:
    tw = rng.choice(TWISTS)
    top = max_degree_of(tr)
    d = rng.randint(0, top)
    shapes = shapes_of_degree(tr, d)
    a = Cycle.of({rng.choice(shapes): rng.randint(-3, 3) for _ in range(2)}, tw, tr)
    b = schubert.sq2(a)
    if d < top:
        up = shapes_of_degree(tr, d + 1)
        b = b + Cycle.of({rng.choice(up): 2 * rng.randint(-2, 2)}, tw, tr)
    return chow_witt.EtaClass(a, b)


def check_eta_ring(b: Bounds, r: CheckResult):
    rng = random.Random(b.seed)
    for k, n in grassmannians(min(b.max_n, 6)):
        tr = Truncation(k, n)
        one = chow_witt.EtaClass.one(tr)
        for _ in range(4):
            x, y, z = (random_eta_class(rng, tr) for _ in range(3))
            r.expect(one * x == x == x * one, ("unit", k, n))
            r.expect((x * y) * z == x * (y * z), ("associative", k, n))
            xy = x * y
            formula = (
                xy.a == schubert.product(x.a, y.a)
                and xy.b == schubert.product(x.b, y.a) + schubert.product(x.a, y.b)
            )
            r.expect(formula, ("formula", k, n))


# -- symfunc --------------------------------------------------------------------


def check_sq2_poly(b: Bounds, r: CheckResult):
    for n in range(1, min(b.max_n, 5) + 1):
        for d in range(b.max_degree + 1):
            for s in symfunc.schur_basis(n, d):
                lhs = symfunc.sq2_poly(symfunc.SchurCombo.basis(s, n, mod2=True))
                r.expect(lhs == symfunc.sq2_closed_form(s, n), (n, s))
            r.expect(symfunc.sq2_squared_vanishes(n, d), ("sq2∘sq2", n, d))


def check_schur_split(b: Bounds, r: CheckResult):
    for n in range(1, min(b.max_n, 4) + 1):
        for d in range(b.max_degree + 1):
            r.expect(symfunc.ker_im_split_poly(n, d)["verified"], (n, d))


def check_inversion(b: Bounds, r: CheckResult):
    rng = random.Random(b.seed)
    for _ in range(100):
        k, m = rng.randint(1, 4), rng.randint(1, 4)
        f, g = symfunc.random_series(rng, k), symfunc.random_series(rng, m)
        r.expect(symfunc.inversion_identities(f, g, 8), (f.coeffs, g.coeffs))


def check_lr_support(b: Bounds, r: CheckResult):
    for size in range(6):
        for s in partitions(size):
            for k in range(1, 4):
                for width in range(1, 4):
                    if len(s) > k + width:
                        continue
                    r.expect(symfunc.lr_support_check(s, k, k + width), (s, k, k + width))


def check_dictionary(b: Bounds, r: CheckResult):
    from .tableau import transpose

    for d1 in range(4):
        for d2 in range(4):
            for s1 in partitions(d1):
                for s2 in partitions(d2):
                    ours = (Cycle.sigma(s1) * Cycle.sigma(s2)).as_dict()
                    nv = max(len(s1) + len(s2), 1)
                    x = symfunc.product(symfunc.SchurCombo.basis(transpose(s1), nv),
                                        symfunc.SchurCombo.basis(transpose(s2), nv))
                    r.expect(ours == symfunc.to_schubert(x), (s1, s2))


# -- flag -------------------------------------------------------------------------


def _flag_bound(b: Bounds) -> int:
    return min(b.max_n, 6)


def check_flag_ring(b: Bounds, r: CheckResult):
    for n in range(1, _flag_bound(b) + 1):
        dims = [len(flag.staircase_basis(n, d)) for d in range(flag.top_degree(n) + 1)]
        r.expect(tuple(dims) == motive.mahonian(n), ("dims", n))
        for d in range(flag.top_degree(n) + 1):
            for e in flag.staircase_basis(n, d):
                c = flag.FlagClass(n, frozenset([e]))
                r.expect(not flag.sq2_flag(flag.sq2_flag(c)), ("sq2∘sq2", n, e))


def check_flag_e(b: Bounds, r: CheckResult):
    for n in range(1, _flag_bound(b) + 1):
        dims = flag.e_flag_dims(n)
        r.expect(dims == flag.exterior_dims(n), ("dims", n))
        for a in range(1, n // 2 + 1):
            t = flag.t_class(n, a)
            r.expect(not flag.sq2_flag(t) and t.degrees == [flag.t_degree(n, a)], ("T", n, a))
        r.expect(flag.exterior_check(n), ("exterior", n))
        w = list(motive.flag_motive(n).w)
        r.expect(w[: len(dims)] == dims, ("witt ranks", n))


SUITES: Dict[str, List[Tuple[str, Callable]]] = {
    "tableau": [
        ("even_closed_form", check_closed_form),
        ("closure_sizes", check_closures),
        ("irredundant_components", check_components),
        ("gaussian_counts", check_gaussian),
    ],
    "schubert": [
        ("sq2_squared_zero", check_sq2_squared),
        ("ker_im_split", check_ker_im),
        ("mod2_kernel_basis", check_mod2_kernel_basis),
        ("pi_kernel_lattice", check_pi_lattice),
        ("truncation_commutes", check_truncation),
        ("doubling", check_doubling),
        ("giambelli", check_giambelli),
        ("product_algebra", check_product_algebra),
    ],
    "motive": [
        ("counts", check_motive_counts),
        ("witt_weights", check_witt),
        ("recursions", check_recursions),
        ("component_multiplicity", check_component_multiplicity),
        ("flag_motive", check_flag_motive),
    ],
    "chow-witt": [
        ("reference_tables", check_reference_tables),
        ("gamma_lattice", check_gamma_lattice),
        ("rank_report", check_rank_report),
        ("eta_ring", check_eta_ring),
    ],
    "symfunc": [
        ("sq2_closed_form", check_sq2_poly),
        ("kernel_split", check_schur_split),
        ("inversion_identities", check_inversion),
        ("lr_support", check_lr_support),
        ("schubert_dictionary", check_dictionary),
    ],
    "flag": [
        ("coinvariant_ring", check_flag_ring),
        ("e_cohomology", check_flag_e),
    ],
}


def run(scope: str = "all", bounds: Optional[Bounds] = None) -> List[CheckResult]:
    bounds = bounds or Bounds()
    scopes = SCOPES if scope == "all" else (scope,)
    results = []
    for sc in scopes:
        if sc not in SUITES:
            raise ValueError(f"unknown scope {sc!r}")
        for name, fn in SUITES[sc]:
            res = CheckResult(sc, name)
            fn(bounds, res)
            results.append(res)
    return sorted(results, key=lambda x: (SCOPES.index(x.scope), x.name))
