import pytest

from mwmotive.tableau import (
    Tableau,
    TableauError,
    Truncation,
    Twist,
    add_boxes,
    addable_positions,
    box_is_white,
    classify,
    closure,
    delete_set,
    enumerate_tableaux,
    even_closed_form,
    irredundant_components,
    removable_positions,
    shapes_of_degree,
    transpose,
)
from oracles import box_count_oracle, brute_closure

U, W = Twist.UNTWISTED, Twist.TWISTED
TR24, TR36 = Truncation(2, 4), Truncation(3, 6)


def test_colouring():
    assert box_is_white(U, 1, 1) is False
    assert box_is_white(W, 1, 1) is True
    assert box_is_white(U, 2, 3) is True
    with pytest.raises(TableauError):
        box_is_white(U, 0, 1)


def test_addable_rows():
    assert addable_positions(Tableau((3, 2, 1)), TR36) == [2, 3]
    assert addable_positions(Tableau(()), TR24) == []
    assert addable_positions(Tableau((), W), TR24) == [1]


def test_addable_rejects_inadmissible():
    with pytest.raises(TableauError):
        addable_positions(Tableau((3,)), TR24)


def test_removable():
    assert removable_positions(Tableau((3, 2, 1)), TR36) == []
    assert sorted(delete_set(Tableau((3, 2, 1), W), TR36)) == sorted([(2, 2, 1), (3, 1, 1), (3, 2)])
    assert removable_positions(Tableau(()), TR24) == []
    assert removable_positions(Tableau((), W), TR24) == []


def test_add_boxes():
    t = Tableau((3, 2, 1))
    assert add_boxes(t, TR36, [1, 2]).shape == (3, 3, 2)
    assert add_boxes(t, TR36, [1]).shape == (3, 3, 1)
    assert add_boxes(t, TR36, []).shape == (3, 2, 1)
    assert add_boxes(Tableau((1,)), TR24, [2]).shape == (1, 1)
    with pytest.raises(TableauError):
        add_boxes(t, TR36, [3])
    with pytest.raises(TableauError):
        add_boxes(t, TR36, [2, 1])


def test_classify():
    assert classify(Tableau((2, 2)), TR24).even
    c = classify(Tableau((1,)), TR24)
    assert c.irredundant and not c.full
    assert classify(Tableau((2,), W), TR24).even


def test_closed_form_examples():
    assert even_closed_form(Tableau((3, 3, 3)), TR36)
    for d in range(10):
        for s in shapes_of_degree(TR36, d):
            assert not even_closed_form(Tableau(s, W), TR36)
    assert even_closed_form(Tableau(()), None)


def test_closure():
    assert closure(Tableau((1,)), TR24) == {(1,), (2,), (1, 1), (2, 1)}
    assert closure(Tableau((2, 2)), TR24) == {(2, 2)}


def test_enumeration():
    tabs = enumerate_tableaux(TR24)
    assert [len(tabs[d]) for d in sorted(tabs)] == [1, 1, 2, 1, 1]
    assert [t.shape for t in enumerate_tableaux(Truncation(1, 5))[3]] == [(3,)]
    assert sum(len(v) for v in enumerate_tableaux(TR36).values()) == 20
    assert [t.shape for t in tabs[2]] == [(2,), (1, 1)]
    with pytest.raises(TableauError):
        enumerate_tableaux(None)


def test_transpose():
    assert transpose((3, 2, 1)) == (3, 2, 1)
    assert transpose((3, 1)) == (2, 1, 1)
    assert transpose((2, 2)) == (2, 2)
    assert transpose(()) == ()


def test_components_examples():
    comps = irredundant_components(TR24, U)
    assert {r: len(c) for r, c in comps.items()} == {(): 1, (1,): 4, (2, 2): 1}
    assert set(irredundant_components(TR24, W)) == {(), (2,), (1, 1), (2, 1)}


@pytest.mark.parametrize("n", range(0, 11))
def test_closed_form_matches_definition(n):
    for k in range(n + 1):
        tr = Truncation(k, n)
        for tw in (U, W):
            for d in range(k * (n - k) + 1):
                for s in shapes_of_degree(tr, d):
                    t = Tableau(s, tw)
                    assert even_closed_form(t, tr) == classify(t, tr).even, (k, n, tw, s)


@pytest.mark.parametrize("n", range(0, 9))
def test_closure_against_brute_force(n):
    for k in range(n + 1):
        tr = Truncation(k, n)
        for tw in (U, W):
            for d in range(k * (n - k) + 1):
                for s in shapes_of_degree(tr, d):
                    t = Tableau(s, tw)
                    cl = closure(t, tr)
                    assert cl == brute_closure(s, tw, tr)
                    assert len(cl) == 2 ** len(addable_positions(t, tr))


@pytest.mark.parametrize("n", range(0, 9))
def test_gaussian_counts(n):
    for k in range(n + 1):
        tr = Truncation(k, n)
        got = [len(shapes_of_degree(tr, d)) for d in range(k * (n - k) + 1)]
        assert got == box_count_oracle(k, n)


def test_untruncated_twisted_has_no_evens():
    for d in range(13):
        for s in shapes_of_degree(None, d):
            assert not classify(Tableau(s, W), None).even
