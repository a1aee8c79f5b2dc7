import pytest
from hypothesis import given, strategies as st

from reidtrace import FreeGroup, GroupRingElement, GroupRingMatrix, NonSquare, augment, ring_trace

from strategies import free_words

F2 = FreeGroup(2)
e, x, y = F2(()), F2((1,)), F2((2,))


def ring(terms):
    return GroupRingElement.from_terms(F2, terms)


@st.composite
def ring_elements(draw, rank=2):
    ws = draw(st.lists(free_words(rank, 5), max_size=5))
    ks = draw(st.lists(st.integers(-4, 4), min_size=len(ws), max_size=len(ws)))
    return GroupRingElement.from_terms(FreeGroup(rank), zip(ws, ks))


def test_difference_of_squares():
    a = ring([(e, 1), (x, 1)])
    b = ring([(e, 1), (x, -1)])
    assert a * b == ring([(e, 1), (x * x, -1)])
    assert str(a * b) == "1[e] -1[x1 x1]"


def test_noncommutative_product():
    assert ring([(x, 1)]) * ring([(y, 1)]) != ring([(y, 1)]) * ring([(x, 1)])


def test_cancellation_drops_terms():
    assert not (ring([(x, 2)]) - ring([(x, 2)]))
    assert str(GroupRingElement.zero(F2)) == "0"


@given(ring_elements(), ring_elements(), ring_elements())
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a * GroupRingElement.one(F2) == a


@given(ring_elements(), ring_elements())
def test_augmentation_is_a_ring_map(a, b):
    assert augment(a * b) == augment(a) * augment(b)
    assert augment(a + b) == augment(a) + augment(b)


def test_matrix_trace():
    m = GroupRingMatrix.build(F2, [[ring([(x, 1)]), ring([(y, 3)])], [ring([]), ring([(e, -1)])]])
    assert ring_trace(m) == ring([(x, 1), (e, -1)])
    with pytest.raises(NonSquare):
        ring_trace(GroupRingMatrix.build(F2, [[ring([(x, 1)]), ring([])]]))
