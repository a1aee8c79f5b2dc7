import itertools

import pytest
from hypothesis import given, strategies as st
from sympy import Matrix as SymMatrix

from reidtrace import (
    DescriptorMismatch,
    FreeAbelian,
    FreeGroup,
    GroupRingElement,
    Homomorphism,
    InfiniteOrUndecidable,
    TraceElement,
    TwistedSetting,
    Verdict,
    augment,
    canonical_rep,
    coefficient_sum,
    enumerate_classes,
    format_trace,
    lift_transform,
    parse_trace,
    project_rho,
    twisted_equiv,
    vector,
)
from reidtrace.classes import twisted_image
from reidtrace.linalg import det, mat_sub

from strategies import abelian_vectors, free_words, int_matrices

Z1 = FreeAbelian(1)
F2 = FreeGroup(2)


def in_image(m, v):
    # Oracle for nonsingular m: v is in the image iff m^-1 v is integral.
    sol = SymMatrix(m).solve(SymMatrix(v))
    return all(x.is_integer for x in sol)


@st.composite
def nonsingular_settings(draw, max_n=3):
    n = draw(st.integers(1, max_n))
    phi = draw(int_matrices(n))
    psi = draw(st.one_of(st.just(tuple(tuple(int(i == j) for j in range(n)) for i in range(n))), int_matrices(n)))
    if det(mat_sub(psi, phi)) == 0:
        phi = tuple(tuple(x + (5 if i == j else 0) for j, x in enumerate(r)) for i, r in enumerate(phi))
    s = TwistedSetting.from_matrices(phi, psi)
    if det(s.difference) == 0:
        s = TwistedSetting.from_matrices(phi, tuple(tuple(x + (11 if i == j else 0) for j, x in enumerate(r)) for i, r in enumerate(phi)))
    return s


def test_circle_degree_three():
    s = TwistedSetting.from_matrices([[3]], [[1]])
    eq = twisted_equiv(s, vector((0,), Z1), vector((2,), Z1))
    assert eq.verdict is Verdict.EQUIVALENT
    assert eq.witness.payload == (-1,)
    assert canonical_rep(s, vector((5,), Z1)).representative.payload == (1,)
    assert [str(c) for c in enumerate_classes(s)] == ["[(0)]", "[(1)]"]


def test_diagonal_setting_example():
    s = TwistedSetting.from_matrices([[0, 0], [0, 0]], [[3, 0], [0, 3]])
    assert canonical_rep(s, vector((4, -1), FreeAbelian(2))).label == "(1,2)"
    assert len(enumerate_classes(s)) == 9


def test_singular_setting_not_enumerable():
    s = TwistedSetting.from_matrices([[1]], [[1]])
    assert enumerate_classes(s) is InfiniteOrUndecidable
    assert not twisted_equiv(s, vector((0,), Z1), vector((1,), Z1))
    assert enumerate_classes(TwistedSetting.fixed_point(Homomorphism.from_words([[2], [1]], F2))) is InfiniteOrUndecidable


def test_codomain_checked():
    s = TwistedSetting.from_matrices([[3]], [[1]])
    with pytest.raises(DescriptorMismatch):
        canonical_rep(s, F2((1,)))


@given(nonsingular_settings(), st.data())
def test_abelian_equivalence_matches_oracle(s, data):
    n = s.codomain.rank
    a = data.draw(abelian_vectors(n))
    b = data.draw(abelian_vectors(n))
    eq = twisted_equiv(s, a, b)
    delta = [y - x for x, y in zip(a.payload, b.payload)]
    assert bool(eq) == in_image(s.difference, delta)
    assert bool(eq) == (canonical_rep(s, a) == canonical_rep(s, b))
    if eq:
        assert twisted_image(s, eq.witness, b) == a


@given(nonsingular_settings())
def test_enumerate_count_and_distinctness(s):
    classes = enumerate_classes(s)
    assert len(classes) == abs(det(s.difference))
    assert len(set(classes)) == len(classes)
    # Pairwise inequivalent, checked by the oracle.
    for c1, c2 in itertools.combinations(classes[:12], 2):
        d = [y - x for x, y in zip(c1.representative.payload, c2.representative.payload)]
        assert not in_image(s.difference, d)


@given(nonsingular_settings(), st.data())
def test_canonical_rep_idempotent(s, data):
    a = data.draw(abelian_vectors(s.codomain.rank))
    c = canonical_rep(s, a)
    assert canonical_rep(s, c.representative) == c
    assert c in enumerate_classes(s)


def test_equivalence_is_an_equivalence_relation():
    s = TwistedSetting.from_matrices([[1, 2], [0, -1]], [[1, 0], [0, 1]])
    vs = [vector(v, FreeAbelian(2)) for v in itertools.product(range(-2, 3), repeat=2)]
    for a in vs:
        assert twisted_equiv(s, a, a)
    for a, b in itertools.product(vs, repeat=2):
        assert bool(twisted_equiv(s, a, b)) == bool(twisted_equiv(s, b, a))
    for a, b, c in itertools.product(vs[:10], repeat=3):
        if twisted_equiv(s, a, b) and twisted_equiv(s, b, c):
            assert twisted_equiv(s, a, c)


def naive_free_search(s, alpha, beta, budget):
    letters = [i for k in range(1, s.domain.rank + 1) for i in (k, -k)]
    for n in range(budget + 1):
        for word in itertools.product(letters, repeat=n):
            sigma = s.domain(word)
            if twisted_image(s, sigma, beta) == alpha:
                return sigma
    return None


@st.composite
def free_settings(draw):
    imgs = tuple(draw(free_words(2, 3)) for _ in range(2))
    return TwistedSetting.fixed_point(Homomorphism(F2, F2, imgs))


@given(free_settings(), free_words(2, 4), free_words(2, 4))
def test_free_search_matches_brute_force(s, a, b):
    budget = 3
    eq = twisted_equiv(s, a, b, budget)
    found = naive_free_search(s, a, b, budget)
    # Same budget, so the search finds a witness exactly when brute force does.
    assert (eq.verdict is Verdict.EQUIVALENT) == (found is not None)
    if eq:
        assert twisted_image(s, eq.witness, b) == a


@given(free_settings(), free_words(2, 4), free_words(2, 4))
def test_free_equivalence_symmetric_with_witness(s, a, b):
    eq = twisted_equiv(s, a, b, 4)
    if eq:
        back = twisted_equiv(s, b, a, 4)
        assert back.verdict is not Verdict.NOT_EQUIVALENT
        # The inverse witness always works.
        assert twisted_image(s, ~eq.witness, a) == b


def test_free_class_example():
    # x -> y, y -> x: x and y are twisted conjugate via sigma = X1.
    s = TwistedSetting.fixed_point(Homomorphism.from_words([[2], [1]], F2))
    eq = twisted_equiv(s, F2((1,)), F2((2,)))
    assert eq and twisted_image(s, eq.witness, F2((2,))) == F2((1,))
    assert twisted_equiv(s, F2(()), F2((1,))).verdict is Verdict.NOT_EQUIVALENT
    c = canonical_rep(s, F2((2, 1, -2)), budget=4)
    assert not c.exact and c.representative.length <= 3


@given(nonsingular_settings(max_n=2), st.data())
def test_rho_additive_and_augmentation(s, data):
    n = s.codomain.rank
    terms = lambda: [(data.draw(abelian_vectors(n, -6, 6)), data.draw(st.integers(-3, 3))) for _ in range(4)]
    a = GroupRingElement.from_terms(s.codomain, terms())
    b = GroupRingElement.from_terms(s.codomain, terms())
    assert project_rho(s, a + b) == project_rho(s, a) + project_rho(s, b)
    assert coefficient_sum(project_rho(s, a)) == augment(a)


@given(nonsingular_settings(max_n=2), st.data())
def test_lift_transform_composes(s, data):
    n = s.codomain.rank
    t = TraceElement.from_terms(s, [(canonical_rep(s, data.draw(abelian_vectors(n))), data.draw(st.integers(-3, 3))) for _ in range(3)])
    a1, b1, a2, b2 = (data.draw(abelian_vectors(n, -4, 4)) for _ in range(4))
    twice = lift_transform(lift_transform(t, a1, b1), a2, b2)
    assert twice == lift_transform(t, a2 * a1, b2 * b1)
    assert coefficient_sum(twice) == coefficient_sum(t)


@given(nonsingular_settings(), st.data())
def test_trace_format_round_trip(s, data):
    n = s.codomain.rank
    t = TraceElement.from_terms(s, [(canonical_rep(s, data.draw(abelian_vectors(n))), data.draw(st.integers(-3, 3))) for _ in range(4)])
    assert parse_trace(format_trace(t), s) == t


def test_trace_format_examples():
    s = TwistedSetting.from_matrices([[3]], [[1]])
    t = parse_trace("-1[(0)] -1[(1)]", s)
    assert format_trace(t) == "-1[(0)] -1[(1)]"
    assert format_trace(parse_trace("0", s)) == "0"
    assert format_trace(parse_trace("2[(3)] +1[(0)]", s)) == "1[(0)] +2[(1)]"
    assert not (t - t)
