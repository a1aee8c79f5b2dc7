from hypothesis import given, strategies as st
from sympy import Matrix as SymMatrix
from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from reidtrace.linalg import (
    det,
    identity,
    is_smith_normal_form,
    mat_mul,
    smith_form,
    smith_normal_form,
    solve_integer,
    mat_vec,
)

from strategies import int_matrices


def sympy_invariants(m):
    if not m or not m[0]:
        return ()
    return tuple(int(x) for x in invariant_factors(DomainMatrix([[ZZ(x) for x in r] for r in m], (len(m), len(m[0])), ZZ)))


def test_smith_examples():
    assert smith_normal_form([[2, 1], [1, 1]])[1] == ((1, 0), (0, 1))
    assert smith_normal_form([[2, 0], [0, 3]])[1] == ((1, 0), (0, 6))
    assert smith_normal_form([[-3]])[1] == ((3,),)
    assert smith_normal_form([[0, 0], [0, 0]])[1] == ((0, 0), (0, 0))
    # frozen from a hand computation: invariant factors 2, 6, 12
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])[1] == ((2, 0, 0), (0, 6, 0), (0, 0, 12))


def test_one_by_one_keeps_row_basis():
    # Negative entries are absorbed by V, so U stays the identity.
    s = smith_form(((-3,),))
    assert s.U == ((1,),) and s.V == ((-1,),)


def test_is_smith_normal_form():
    assert is_smith_normal_form(((1, 0), (0, 2)))
    assert is_smith_normal_form(((1, 0), (0, 0)))
    assert not is_smith_normal_form(((2, 0), (0, 3)))
    assert not is_smith_normal_form(((0, 0), (0, 1)))
    assert not is_smith_normal_form(((0, 1), (0, 0)))
    assert not is_smith_normal_form(((-1, 0), (0, 1)))


@given(st.integers(1, 4).flatmap(lambda n: int_matrices(n, -9, 9)))
def test_smith_invariants(m):
    s = smith_form(m)
    n = len(m)
    assert mat_mul(mat_mul(s.U, m), s.V) == s.D
    assert mat_mul(s.U, s.U_inv) == identity(n)
    assert mat_mul(s.V, s.V_inv) == identity(n)
    assert abs(det(s.U)) == 1 and abs(det(s.V)) == 1
    assert is_smith_normal_form(s.D)
    assert abs(det(s.D)) == abs(det(m))


@given(st.integers(1, 4).flatmap(lambda n: int_matrices(n, -9, 9)))
def test_smith_matches_sympy(m):
    diag = tuple(d for d in smith_form(m).diagonal if d)
    assert diag == tuple(abs(d) for d in sympy_invariants(m) if d)


@given(st.integers(1, 5).flatmap(lambda n: int_matrices(n, -20, 20)))
def test_det_matches_sympy(m):
    assert det(m) == int(SymMatrix(m).det())


def test_rectangular_smith():
    m = ((2, 4, 6), (1, 3, 5))
    s = smith_form(m)
    assert mat_mul(mat_mul(s.U, m), s.V) == s.D
    assert s.diagonal == (1, 2)


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(int_matrices(n), st.lists(st.integers(-10, 10), min_size=n, max_size=n))))
def test_solve_integer(args):
    m, x = args
    b = mat_vec(m, x)
    y = solve_integer(m, b)
    assert y is not None and mat_vec(m, y) == b


def test_solve_integer_detects_no_solution():
    assert solve_integer(((2,),), (1,)) is None
    assert solve_integer(((2, 0), (0, 3)), (4, 5)) is None
    assert solve_integer(((0,),), (0,)) == (0,)
