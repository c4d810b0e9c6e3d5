import json
import random

import pytest

from mwmotive import reference_tables
from mwmotive.chow_witt import (
    GW_EVEN,
    Z_H,
    Z_PARTIAL,
    ChowWittError,
    EtaClass,
    chow_witt_basis,
    eta_class_of,
    eta_mul,
    gamma_lattice_check,
    rank_identity,
    rank_report,
    reference_comparison,
)
from mwmotive.schubert import Cycle
from mwmotive.tableau import Tableau, Truncation, Twist
from mwmotive.verify import random_eta_class

U, W = Twist.UNTWISTED, Twist.TWISTED
TR24 = Truncation(2, 4)


def sig(shape, tr=TR24, twist=U):
    return Cycle.sigma(shape, twist, tr)


def test_invariant_enforced():
    with pytest.raises(ChowWittError):
        EtaClass(sig((1,)), Cycle.zero(truncation=TR24))
    EtaClass(sig((1,)), sig((2,)) + sig((1, 1)) + 2 * sig((2,)))


def test_eta_mul_examples():
    one = EtaClass.one(TR24)
    c = EtaClass(sig((1,)), sig((2,)) + sig((1, 1)))
    assert one * c == c
    sq = c * c
    assert sq.a == sig((2,)) + sig((1, 1))
    assert sq.b == 2 * (sig((1,)) * (sig((2,)) + sig((1, 1))))
    zero = Cycle.zero(truncation=TR24)
    z1 = EtaClass(zero, 2 * sig((1,)))
    z2 = EtaClass(zero, 2 * sig((2,)))
    assert z1 * z2 == EtaClass(zero, zero)


def test_eta_mul_context_mismatch():
    a = EtaClass.one(TR24)
    b = EtaClass.one(Truncation(2, 5))
    with pytest.raises(ChowWittError):
        eta_mul(a, b)


def test_eta_class_of_examples():
    c = eta_class_of(Tableau((1,)), TR24)
    assert c.a == sig((1,)) and c.b == sig((2,)) + sig((1, 1))
    c = eta_class_of(Tableau((1,)), TR24, [2])
    assert c.a == sig((1, 1)) and c.b == sig((2, 1))
    c = eta_class_of(Tableau((), W), TR24)
    assert c.a == sig((), twist=W) and c.b == sig((1,), twist=W)
    with pytest.raises(ChowWittError):
        eta_class_of(Tableau((2, 2)), TR24)
    with pytest.raises(ChowWittError):
        eta_class_of(Tableau((1,)), TR24, [1])


@pytest.mark.parametrize("n", range(2, 7))
def test_eta_ring_axioms(n):
    rng = random.Random(n)
    for k in range(n + 1):
        tr = Truncation(k, n)
        one = EtaClass.one(tr)
        for _ in range(5):
            x, y, z = (random_eta_class(rng, tr) for _ in range(3))
            assert one * x == x == x * one
            assert (x * y) * z == x * (y * z)
            xy = x * y
            assert xy.a == x.a * y.a and xy.b == x.b * y.a + x.a * y.b


@pytest.mark.parametrize("k,n,twist", [(2, 4, U), (2, 4, W), (3, 6, U), (3, 6, W)])
def test_reference_tables(k, n, twist):
    assert reference_comparison(k, n, twist) == {"gw": True, "z": True}


def test_reference_fixture_sizes():
    for (k, n, _), table in reference_tables.REFERENCE.items():
        total = len(table["gw"]) + len(table["z"])
        # each η-index contributes two Z generators, each even tableau one GW generator
        assert total == {(2, 4): 6, (3, 6): 20}[(k, n)]


def test_basis_examples():
    t = chow_witt_basis(2, 4)
    assert t.gw_shapes() == [(), (2, 2)]
    assert sorted(chow_witt_basis(2, 4, W).gw_shapes()) == [(1, 1), (2,)]
    assert chow_witt_basis(3, 6, W).gw_shapes() == []
    row2 = t.row(2)
    assert [g.kind for g in row2.z] == [Z_H, Z_PARTIAL]
    assert all(g.kind == GW_EVEN for r in t.degrees for g in r.gw)


def test_generator_gamma_images():
    t = chow_witt_basis(3, 6)
    for r in t.degrees:
        for g in r.z:
            if g.kind == Z_H:
                assert g.gamma_image == 2 * Cycle.sigma(g.source, U, Truncation(3, 6))
                assert sum(g.source) == r.d
            else:
                assert sum(g.source) + 1 == r.d


def test_witt_symbols():
    t = chow_witt_basis(3, 6)
    symbols = {g.source: dict(g.meta)["witt_symbol"] for r in t.degrees for g in r.gw}
    assert symbols[(2, 2)] == "γ(1)"
    assert symbols[(3, 1, 1)] == "R·γ()"
    assert symbols[(3, 3, 3)] == "R·γ(1)"


@pytest.mark.parametrize("n", range(0, 9))
def test_lattice_and_ranks(n):
    for k in range(n + 1):
        for tw in (U, W):
            assert gamma_lattice_check(k, n, tw)
            assert all(r.consistent for r in rank_report(k, n, tw))
            assert rank_identity(k, n, tw)


def test_rank_report_examples():
    r = rank_report(2, 4)[2]
    assert (r.gw_rank, r.e_dim, r.im_dim, r.ker_dim) == (0, 0, 1, 1)
    r = rank_report(3, 6)[5]
    assert r.gw_rank == 1


def test_table_json_and_markdown():
    t = chow_witt_basis(2, 4, W)
    js = t.to_json()
    assert set(js) == {"k", "n", "twist", "degrees"}
    assert set(js["degrees"][0]) == {"d", "gw", "z"}
    assert js["degrees"][0]["z"][0] == {"tag": "z_h", "gamma_image": [{"shape": [], "coeff": 2}]}
    json.dumps(js)
    assert "| 2 | σ_2, σ_1,1 |" in t.to_markdown()
