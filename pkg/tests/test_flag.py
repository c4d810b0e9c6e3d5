import pytest

from mwmotive.flag import (
    FlagClass,
    FlagError,
    complete_homog,
    e_flag_dims,
    exterior_check,
    exterior_dims,
    normal_form,
    solve_sq2,
    sq2_flag,
    staircase_basis,
    t_class,
    t_degree,
    top_degree,
)
from mwmotive.motive import flag_motive, mahonian


def var(n, i):
    return FlagClass.variable(n, i)


def test_normal_form_examples():
    n = 4
    assert not normal_form(n, [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)])
    assert not normal_form(3, [(3, 0, 0)])
    assert normal_form(3, [(2, 1, 0)]) == FlagClass(3, frozenset([(2, 1, 0)]))
    with pytest.raises(FlagError):
        FlagClass(3, frozenset([(3, 0, 0)]))


def test_sq2_examples():
    assert sq2_flag(var(3, 1)) == var(3, 1) * var(3, 1)
    x1, x2 = var(4, 1), var(4, 2)
    assert sq2_flag(x1 * x2) == x1 * x1 * x2 + x1 * x2 * x2
    assert not sq2_flag(FlagClass.one(3))


def test_complete_homog_examples():
    assert complete_homog(1, 2, 3) == var(3, 1) + var(3, 2)
    assert complete_homog(2, 1, 3) == var(3, 1) * var(3, 1)
    assert not complete_homog(3, 3, 3)
    with pytest.raises(FlagError):
        complete_homog(1, 4, 3)


def test_solve_sq2_examples():
    assert solve_sq2(FlagClass.zero(3)) == FlagClass.zero(3)
    assert not (var(3, 1) ** 4)
    target = var(3, 1) ** 2
    u = solve_sq2(target)
    assert u is not None and sq2_flag(u) == target
    # x_1 has no preimage: nothing in degree 0 maps onto it
    assert solve_sq2(var(3, 1)) is None


def test_t_class_examples():
    assert t_class(3, 1) == FlagClass(3, frozenset([(2, 1, 0)]))
    assert t_class(4, 2) == var(4, 1) ** 3
    assert t_class(2, 1) == var(2, 1)
    with pytest.raises(FlagError):
        t_class(3, 2)


@pytest.mark.parametrize("n", range(1, 8))
def test_coinvariant_dims(n):
    dims = [len(staircase_basis(n, d)) for d in range(top_degree(n) + 1)]
    assert tuple(dims) == mahonian(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_sq2_squared(n):
    for d in range(top_degree(n) + 1):
        for e in staircase_basis(n, d):
            assert not sq2_flag(sq2_flag(FlagClass(n, frozenset([e]))))


@pytest.mark.parametrize("n", range(1, 7))
def test_t_classes_closed(n):
    for a in range(1, n // 2 + 1):
        t = t_class(n, a)
        assert not sq2_flag(t)
        assert t.degrees == [t_degree(n, a)]


def test_e_dims_examples():
    assert e_flag_dims(3) == [1, 0, 0, 1]
    assert e_flag_dims(4) == [1, 0, 0, 2, 0, 0, 1]
    dims = e_flag_dims(5)
    assert {d for d, x in enumerate(dims) if x} == {0, 3, 7, 10}
    assert all(x in (0, 1) for x in dims)


@pytest.mark.parametrize("n", range(1, 7))
def test_exterior(n):
    dims = e_flag_dims(n)
    assert dims == exterior_dims(n)
    assert sum(dims) == 2 ** (n // 2)
    assert max(d for d, x in enumerate(dims) if x) == top_degree(n)
    assert exterior_check(n)
    assert list(flag_motive(n).w[: len(dims)]) == dims


def test_product_of_generators_spans_top():
    t1, t2 = t_class(4, 1), t_class(4, 2)
    assert (t1 * t2).degrees == [6]
