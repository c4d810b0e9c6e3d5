"""Randomised properties across modules."""

from hypothesis import given, settings
from hypothesis import strategies as st

from mwmotive import lattice
from mwmotive.motive import eta_from_counts
from mwmotive.schubert import Cycle, lattice_equal, product, sq2
from mwmotive.tableau import (
    Tableau,
    Truncation,
    Twist,
    addable_positions,
    classify,
    closure,
    even_closed_form,
    shapes_of_degree,
)

from oracles import brute_closure

twists = st.sampled_from([Twist.UNTWISTED, Twist.TWISTED])


@st.composite
def grassmannian(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(0, n))
    return Truncation(k, n)


@st.composite
def shape_in(draw, tr):
    d = draw(st.integers(0, tr.k * tr.width))
    return draw(st.sampled_from(shapes_of_degree(tr, d)))


@st.composite
def truncated_shape(draw):
    tr = draw(grassmannian())
    return tr, draw(shape_in(tr))


@st.composite
def cycle(draw, tr, twist, degree):
    shapes = shapes_of_degree(tr, degree)
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(shapes), max_size=len(shapes)))
    return Cycle.of(dict(zip(shapes, coeffs)), twist, tr)


@given(truncated_shape(), twists)
def test_closure_matches_brute_force(ts, twist):
    tr, shape = ts
    t = Tableau(shape, twist)
    assert closure(t, tr) == brute_closure(shape, twist, tr)
    assert len(closure(t, tr)) == 2 ** len(addable_positions(t, tr)) or not classify(t, tr).irredundant


@given(truncated_shape(), twists)
def test_even_closed_form_agrees(ts, twist):
    tr, shape = ts
    t = Tableau(shape, twist)
    assert even_closed_form(t, tr) == classify(t, tr).even


@given(st.data(), grassmannian(), twists)
@settings(max_examples=60)
def test_sq2_squares_to_zero(data, tr, twist):
    d = data.draw(st.integers(0, tr.k * tr.width))
    c = data.draw(cycle(tr, twist, d))
    assert not sq2(sq2(c)).reduce().terms


@given(st.data(), grassmannian(max_n=6))
@settings(max_examples=40, deadline=None)
def test_product_commutes_and_adds_degree(data, tr):
    top = tr.k * tr.width
    d1, d2 = data.draw(st.integers(0, top)), data.draw(st.integers(0, top))
    a = data.draw(cycle(tr, Twist.UNTWISTED, d1))
    b = data.draw(cycle(tr, Twist.TWISTED, d2))
    ab, ba = product(a, b), product(b, a)
    assert ab == ba
    assert ab.twist is Twist.TWISTED
    assert set(ab.degrees) <= {d1 + d2}


@given(st.lists(st.integers(0, 6), min_size=1, max_size=8))
def test_eta_counts_telescope(t):
    # any (w, t) determines s by s_j = w_j + t_j + t_{j-1}; recover t
    w = [x % 3 for x in t]
    s = [w[j] + t[j] + (t[j - 1] if j else 0) for j in range(len(t))]
    assert eta_from_counts(s, w) == tuple(t)


@given(st.data(), grassmannian(max_n=6), twists)
@settings(max_examples=40, deadline=None)
def test_lattice_equal_under_unimodular_moves(data, tr, twist):
    d = data.draw(st.integers(0, tr.k * tr.width))
    size = len(shapes_of_degree(tr, d))
    gens = [data.draw(cycle(tr, twist, d)) for _ in range(data.draw(st.integers(1, size + 1)))]
    moved = list(gens)
    for _ in range(data.draw(st.integers(0, 6))):
        i = data.draw(st.integers(0, len(moved) - 1))
        j = data.draw(st.integers(0, len(moved) - 1))
        if i != j:
            moved[i] = moved[i] + moved[j].scale(data.draw(st.integers(-2, 2)))
        else:
            moved[i] = moved[i].scale(-1)
    assert lattice_equal(gens, moved, d, tr)
    doubled = [g.scale(2) for g in gens]
    basis = shapes_of_degree(tr, d)
    rank = lattice.lattice_rank([g.vector(basis) for g in gens])
    assert lattice_equal(gens, doubled, d, tr) == (rank == 0)
