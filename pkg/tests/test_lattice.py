from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from oracles import det, matmul
from toric_sections.errors import DimensionMismatch, ZeroVector
from toric_sections.lattice import (clear_denominators, hnf, integer_kernel, primitive,
                                    rank, solve_integer, solve_rational)

small = st.integers(min_value=-6, max_value=6)


@pytest.mark.parametrize("v, expected", [
    ((2, 4), (1, 2)),
    ((1, 0), (1, 0)),
    ((-3, -6, 9), (-1, -2, 3)),
])
def test_primitive_examples(v, expected):
    assert primitive(v) == expected


def test_primitive_zero():
    with pytest.raises(ZeroVector):
        primitive((0, 0))


@given(st.lists(small, min_size=1, max_size=5).filter(any))
def test_primitive_idempotent(v):
    p = primitive(v)
    assert primitive(p) == p
    # same ray: positive multiple
    ratios = {Fraction(a, b) for a, b in zip(v, p) if b}
    assert len(ratios) == 1 and ratios.pop() > 0


def test_clear_denominators():
    assert clear_denominators((Fraction(1, 2), Fraction(1))) == (1, 2)
    assert clear_denominators((Fraction(-1), Fraction(0), Fraction(1))) == (-1, 0, 1)


def _is_echelon(H):
    last = -1
    seen_zero = False
    for row in H:
        nz = [j for j, e in enumerate(row) if e]
        if not nz:
            seen_zero = True
            continue
        assert not seen_zero, "zero row above a nonzero row"
        p = nz[0]
        assert p > last and row[p] > 0
        for above in H[:H.index(row)]:
            assert 0 <= above[p] < row[p]
        last = p
    return True


def test_hnf_identity_and_swap():
    H, U = hnf([[2, 0], [0, 2]])
    assert H == [(2, 0), (0, 2)] and U == [(1, 0), (0, 1)]
    H, U = hnf([[0, 1], [1, 0]])
    assert H == [(1, 0), (0, 1)] and U == [(0, 1), (1, 0)]


def test_hnf_defining_equations():
    A = [[2, 4], [1, 3]]
    H, U = hnf(A)
    assert H == matmul(U, A)
    assert abs(det(U)) == 1
    assert _is_echelon(H)


@settings(max_examples=200)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_hnf_property(m, n, data):
    A = [data.draw(st.lists(small, min_size=n, max_size=n)) for _ in range(m)]
    H, U = hnf(A)
    assert [list(r) for r in H] == [list(r) for r in matmul(U, A)]
    assert abs(det(U)) == 1
    assert _is_echelon(H)
    assert sum(1 for r in H if any(r)) == rank(A)


def test_solve_integer_examples():
    assert solve_integer([[2]], [4]) == (2,)
    assert solve_integer([[2]], [3]) is None
    # With every ray of P^2 the system is inconsistent (D_1 is not principal);
    # each maximal cone alone is solvable.
    A = [[1, 0], [0, 1], [-1, -1]]
    assert solve_integer(A, [-1, 0, 0]) is None
    assert solve_rational(A, [-1, 0, 0]) is None
    assert solve_integer(A[:2], [-1, 0]) == (-1, 0)


def test_solve_rational_examples():
    assert solve_rational([[2]], [1]) == (Fraction(1, 2),)
    assert solve_rational([[1], [1]], [0, 1]) is None
    assert solve_rational([[1, 0], [0, 1]], [-1, 1]) == (-1, 1)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        solve_integer([[1, 2]], [1, 2])
    with pytest.raises(DimensionMismatch):
        solve_rational([[1, 2], [1]], [1, 2])


@settings(max_examples=200)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_solve_integer_property(m, n, data):
    A = [data.draw(st.lists(small, min_size=n, max_size=n)) for _ in range(m)]
    x0 = data.draw(st.lists(small, min_size=n, max_size=n))
    b = [sum(a * x for a, x in zip(row, x0)) for row in A]
    x = solve_integer(A, b)
    assert x is not None
    assert [sum(a * xi for a, xi in zip(row, x)) for row in A] == b


@settings(max_examples=200)
@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_solve_integer_absent_means_no_integral_solution(m, n, data):
    A = [data.draw(st.lists(small, min_size=n, max_size=n)) for _ in range(m)]
    b = data.draw(st.lists(st.integers(-8, 8), min_size=m, max_size=m))
    x = solve_integer(A, b)
    q = solve_rational(A, b)
    if x is not None:
        assert [sum(a * xi for a, xi in zip(row, x)) for row in A] == b
        assert q is not None
    elif q is not None:
        assert [sum(a * xi for a, xi in zip(row, q)) for row in A] == b
        if rank(A) == n:  # unique solution, so it must be non-integral
            assert any(Fraction(v).denominator != 1 for v in q)
    if x is None:
        # brute force: no small integral solution either
        for y in product(range(-9, 10), repeat=n):
            assert [sum(a * yi for a, yi in zip(row, y)) for row in A] != b


@given(st.fractions(max_denominator=50))
def test_fraction_canonical_roundtrip(f):
    g = Fraction(f.numerator * 7, f.denominator * 7)
    assert g == f and g.numerator == f.numerator and g.denominator == f.denominator > 0


def test_integer_kernel_is_saturated():
    K = integer_kernel([[2, 4]], 2)
    assert K == [(-2, 1)] or K == [(2, -1)]
    assert integer_kernel([], 2) == [(1, 0), (0, 1)]
