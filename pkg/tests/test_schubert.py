import pytest

from mwmotive import gf2, lattice
from mwmotive.schubert import (
    Cycle,
    CycleError,
    doubling,
    doubling_check,
    e_dimension,
    even_shapes,
    giambelli_identity_check,
    giambelli_witness,
    ker_im_split,
    ker_sq2_basis,
    ker_sq2_pi_basis,
    lattice_equal,
    product,
    sq2,
    sq2_matrix,
    truncate,
)
from mwmotive.tableau import Truncation, Twist, add_set, Tableau, shapes_of_degree

U, W = Twist.UNTWISTED, Twist.TWISTED
TR24, TR36 = Truncation(2, 4), Truncation(3, 6)


def sig(shape, tr=None, twist=U, mod2=False):
    return Cycle.sigma(shape, twist, tr, mod2)


def test_cycle_arithmetic():
    a = sig((1,)) + sig((1,))
    assert a.coeff((1,)) == 2
    assert not (a - 2 * sig((1,)))
    assert sig((1,), mod2=True) + sig((1,), mod2=True) == Cycle.zero(mod2=True)
    with pytest.raises(CycleError):
        sig((3,), TR24)
    with pytest.raises(CycleError):
        sig((1,)) + sig((1,), mod2=True)


def test_sq2_examples():
    assert sq2(sig((1,), TR24)) == sig((2,), TR24) + sig((1, 1), TR24)
    assert not sq2(sig((), TR24))
    assert sq2(sig((), TR24, W)) == sig((1,), TR24, W)


def test_truncate_examples():
    assert not truncate(sig((3,)), TR24)
    assert truncate(sig((2, 1)), TR24) == sig((2, 1), TR24)
    assert truncate(sig((3,)) + sig((2, 1)), TR24) == sig((2, 1), TR24)


def test_sq2_matrix_columns():
    m = sq2_matrix(TR36, U, 6)
    for j, s in enumerate(m.source):
        expected = {m.target.index(t) for t in add_set(Tableau(s), TR36)}
        assert set(gf2.bits(m.columns[j])) == expected


def test_e_dimension_examples():
    assert [e_dimension(TR24, U, d) for d in range(5)] == [1, 0, 0, 0, 1]
    dims = [e_dimension(TR36, U, d) for d in range(10)]
    assert {d for d, x in enumerate(dims) if x} == {0, 4, 5, 9}
    assert all(x in (0, 1) for x in dims)
    assert all(e_dimension(TR36, W, d) == 0 for d in range(10))


def test_ker_im_split_examples():
    s4 = ker_im_split(TR24, U, 4)
    assert s4.even_basis == ((2, 2),) and s4.im_basis == () and s4.verified
    s2 = ker_im_split(TR24, U, 2)
    assert s2.even_basis == ()
    assert [c.as_dict() for c in s2.im_basis] == [{(2,): 1, (1, 1): 1}]
    assert s2.verified


@pytest.mark.parametrize("n", range(0, 9))
def test_ker_im_split_all(n):
    for k in range(n + 1):
        tr = Truncation(k, n)
        for tw in (U, W):
            for d in range(k * (n - k) + 1):
                assert ker_im_split(tr, tw, d).verified


def test_ker_sq2_basis_examples():
    assert ker_sq2_basis(TR24, U, 2) == [sig((2,), TR24, mod2=True) + sig((1, 1), TR24, mod2=True)]
    assert ker_sq2_basis(TR24, U, 3) == [sig((2, 1), TR24, mod2=True)]


def test_ker_sq2_pi_basis_examples():
    deg2 = ker_sq2_pi_basis(TR24, U, 2)
    assert sorted(c.as_dict().items() for c in deg2) == sorted(
        [{(2,): 1, (1, 1): 1}.items(), {(1, 1): 2}.items()]
    )
    published = [2 * sig((2,), TR24), sig((2,), TR24) + sig((1, 1), TR24)]
    assert lattice_equal(deg2, published, 2)
    assert ker_sq2_pi_basis(TR24, U, 1) == [2 * sig((1,), TR24)]
    assert ker_sq2_pi_basis(TR24, U, 0) == [sig((), TR24)]


def test_lattice_equal_examples():
    a = [2 * sig((1, 1), TR24), sig((2,), TR24) + sig((1, 1), TR24)]
    b = [2 * sig((2,), TR24), sig((2,), TR24) + sig((1, 1), TR24)]
    assert lattice_equal(a, b, 2)
    assert not lattice_equal([sig((1,), TR24)], [2 * sig((1,), TR24)], 1)
    assert lattice_equal([], [], 3, TR24)


@pytest.mark.parametrize("n", range(0, 9))
def test_pi_basis_lattice(n):
    for k in range(n + 1):
        tr = Truncation(k, n)
        for tw in (U, W):
            for d in range(k * (n - k) + 1):
                basis = shapes_of_degree(tr, d)
                vecs = [c.vector(basis) for c in ker_sq2_pi_basis(tr, tw, d)]
                assert lattice.lattice_rank(vecs) == len(basis)
                assert lattice.index_of(vecs) == 2 ** sq2_matrix(tr, tw, d).rank
                # reductions mod 2 are Sq²-closed
                m = sq2_matrix(tr, tw, d)
                for v in vecs:
                    bits = sum(1 << j for j, x in enumerate(v) if x % 2)
                    assert gf2.combine(m.columns, bits) == 0


def test_doubling_examples():
    assert doubling(sig((1,))) == sig((2, 2))
    assert doubling(sig(())) == sig(())
    image = {s for s, _ in doubling(sig((1,))).terms}
    assert image == set(even_shapes(TR24, U, 4))
    with pytest.raises(CycleError):
        doubling(sig((1,), mod2=True))


@pytest.mark.parametrize("n", range(0, 11))
def test_doubling_image_is_even_span(n):
    for k in range(n + 1):
        assert doubling_check(k, n)


def test_product_examples():
    assert product(sig((1,)), sig((1,))) == sig((2,)) + sig((1, 1))
    assert product(sig((2,)), sig((2,))) == sig((4,)) + sig((3, 1)) + sig((2, 2))
    tr = Truncation(1, 3)
    assert product(sig((1,), tr), sig((1,), tr)) == sig((2,), tr)


def test_product_twists_add():
    c = product(sig((), TR24, W), sig((1,), TR24, W))
    assert c.twist is U


def test_giambelli():
    assert giambelli_witness(2).as_dict() == {(7,): 1, (5, 2): 1}
    for j in (1, 2, 3):
        assert giambelli_identity_check(j)
    with pytest.raises(CycleError):
        giambelli_identity_check(0)


def test_sq2_squares_to_zero():
    for n in range(9):
        for k in range(n + 1):
            tr = Truncation(k, n)
            for tw in (U, W):
                for d in range(k * (n - k)):
                    for s in shapes_of_degree(tr, d):
                        assert not sq2(sq2(sig(s, tr, tw, mod2=True)))
