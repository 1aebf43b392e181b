from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from h8nichols.cyclo import (I, ONE, SQRT2, SQRT_I, ZERO, ZETA, CycloMatrix, CycloNumber,
                             DimensionMismatch, NoSolution, kernel_basis, parse_number, rank, solve)

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)
numbers = st.builds(CycloNumber, small, small, small, small)
nonzero = numbers.filter(lambda a: not a.is_zero())


def close(a, b):
    return abs(a.to_complex() - b) < 1e-9


def test_generators():
    assert ZETA ** 4 == -ONE
    assert ZETA ** 8 == ONE
    assert I * I == -ONE
    assert SQRT2 * SQRT2 == 2 * ONE
    assert SQRT_I * SQRT_I == I
    assert str(ZETA ** 3) == "z^3"


@given(numbers, numbers, numbers)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == ZERO


@given(numbers, numbers)
def test_matches_complex_embedding(a, b):
    assert close(a * b, a.to_complex() * b.to_complex())
    assert close(a + b, a.to_complex() + b.to_complex())


@given(nonzero)
def test_inverse(a):
    assert a * a.inverse() == ONE
    assert (ONE / a) * a == ONE


@given(numbers, numbers, st.sampled_from([1, 3, 5, 7]))
def test_galois_is_automorphism(a, b, k):
    assert (a * b).galois(k) == a.galois(k) * b.galois(k)
    assert (a + b).galois(k) == a.galois(k) + b.galois(k)


@given(nonzero)
def test_norm_is_rational_and_multiplicative(a):
    n = a.norm()
    assert isinstance(n, Fraction) and n > 0
    assert (a * a).norm() == n * n


@given(numbers)
def test_parse_render_roundtrip(a):
    assert parse_number(a.render().replace("z", "zeta")) == a


@pytest.mark.parametrize("text,value", [
    ("1/2", CycloNumber(Fraction(1, 2))), ("i", I), ("sqrt2", SQRT2), ("sqrti", ZETA),
    ("(1+i)/2", CycloNumber(Fraction(1, 2), 0, Fraction(1, 2))), ("-zeta^3", -ZETA ** 3),
])
def test_parse_literals(text, value):
    assert parse_number(text) == value


def test_hash_is_structural():
    assert hash(CycloNumber(2, 0, 0, 0) / 4) == hash(CycloNumber(Fraction(1, 2)))
    assert len({ONE, CycloNumber(1), 2 * ONE / 2}) == 1


def _dense_complex(m):
    return np.array([[v.to_complex() for v in row] for row in m.to_dense()])


def _numeric_rank(m):
    a = _dense_complex(m)
    if a.size == 0:
        return 0
    s = np.linalg.svd(a, compute_uv=False)
    return int((s > 1e-9 * max(1.0, s[0])).sum())


entries = st.sampled_from([ZERO] * 6 + [ONE, -ONE, I, ZETA, 2 * ONE, ONE + I, SQRT2])


@st.composite
def sparse_matrices(draw, max_n=20):
    nr = draw(st.integers(1, max_n))
    nc = draw(st.integers(1, max_n))
    rows = [[draw(entries) for _ in range(nc)] for _ in range(nr)]
    k = draw(st.integers(0, nr - 1))
    if nr > 1 and draw(st.booleans()):
        # force a dependency: row k a combination of two others
        a, b = draw(st.integers(0, nr - 1)), draw(st.integers(0, nr - 1))
        rows[k] = [x + I * y for x, y in zip(rows[a], rows[b])]
    return CycloMatrix.from_dense(rows)


@settings(max_examples=60, deadline=None)
@given(sparse_matrices())
def test_rank_nullity_against_dense_elimination(m):
    r = rank(m)
    ker = kernel_basis(m)
    assert r + len(ker) == m.ncols
    assert r == _numeric_rank(m)
    for v in ker:
        assert all(x.is_zero() for x in (m.apply({j: a for j, a in enumerate(v) if a}).values()))


@settings(max_examples=40, deadline=None)
@given(sparse_matrices(max_n=8), st.lists(entries, min_size=8, max_size=8))
def test_solve_consistent_rhs(m, xs):
    x = {j: xs[j] for j in range(m.ncols) if xs[j]}
    b = m.apply(x)
    sol = solve(m, [b.get(i, ZERO) for i in range(m.nrows)])
    got = m.apply({j: a for j, a in enumerate(sol) if a})
    assert got == b


def test_solve_errors():
    m = CycloMatrix.from_dense([[1, 1], [1, 1]])
    with pytest.raises(NoSolution):
        solve(m, [1, 2])
    with pytest.raises(DimensionMismatch):
        solve(m, [1])


def test_matrix_algebra():
    a = CycloMatrix.from_dense([[1, ZETA], [0, I]])
    assert a @ CycloMatrix.identity(2) == a
    assert (a @ a).to_dense()[0][1] == ZETA + ZETA * I
    assert a.kron(CycloMatrix.identity(2)).shape == (4, 4)
    assert a.transpose().transpose() == a
