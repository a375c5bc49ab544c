import random
from itertools import product

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from liecomplete.errors import ShapeError
from liecomplete.lattice import (hermite_normal_form, in_lattice, integer_kernel, smith_kernel,
                                 smith_normal_form)


def _mul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def test_smith_textbook():
    _, S, _ = smith_normal_form([[12, 6, 4], [3, 9, 6], [2, 16, 14]])
    assert S == [[1, 0, 0], [0, 10, 0], [0, 0, 30]]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_smith_decomposition(m, n, data):
    a = [[data.draw(st.integers(-6, 6)) for _ in range(n)] for _ in range(m)]
    U, S, V = smith_normal_form(a)
    assert _mul(_mul(U, a), V) == S
    assert abs(sympy.Matrix(U).det()) == 1 and abs(sympy.Matrix(V).det()) == 1
    diag = [S[i][i] for i in range(min(m, n))]
    assert all(S[i][j] == 0 for i in range(m) for j in range(n) if i != j)
    assert all(d >= 0 for d in diag)
    nz = [d for d in diag if d]
    assert diag[:len(nz)] == nz
    assert all(nz[i + 1] % nz[i] == 0 for i in range(len(nz) - 1))


def test_smith_kernel_examples():
    assert smith_kernel([[0, 0], [0, 0]], 5) == [[1, 0], [0, 1]]
    assert smith_kernel([[0, 1], [-1, 0]], 5) == [[5, 0], [0, 5]]
    assert smith_kernel([[0, 2], [-2, 0]], 0) == []


def test_smith_kernel_exhaustive_confirmation():
    # only a ≡ 0 solves E a ≡ 0 (mod 5) for E = [[0,1],[-1,0]]
    sols = [a for a in product(range(5), repeat=2) if (a[1]) % 5 == 0 and (-a[0]) % 5 == 0]
    assert sols == [(0, 0)]


def test_negative_modulus():
    with pytest.raises(ValueError):
        smith_kernel([[1]], -1)


def test_ragged():
    with pytest.raises(ShapeError):
        smith_kernel([[1, 2], [3]], 0)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 6), st.data())
def test_smith_kernel_closure(m, n, N, data):
    e = [[data.draw(st.integers(-5, 5)) for _ in range(n)] for _ in range(m)]
    basis = smith_kernel(e, N)
    rnd = random.Random(0)

    def solves(a):
        r = [sum(x * y for x, y in zip(row, a)) for row in e]
        return all((x % N == 0) if N else x == 0 for x in r)

    for b in basis:
        assert solves(b)
    for _ in range(10):
        coeffs = [rnd.randint(-3, 3) for _ in basis]
        a = [sum(c * b[k] for c, b in zip(coeffs, basis)) for k in range(n)]
        assert solves(a)
        assert in_lattice(basis, a)
    if N:
        assert len(basis) == n
        for k in range(n):
            assert in_lattice(basis, [N * (i == k) for i in range(n)])
        # oracle: lattice mod N equals the enumerated solution set
        enum = {a for a in product(range(N), repeat=n) if solves(a)}
        got = {a for a in product(range(N), repeat=n) if in_lattice(basis, a)}
        assert enum == got


def test_integer_kernel_against_sympy():
    a = [[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, 1, 0]]
    k = integer_kernel(a, 4)
    assert len(k) == 4 - sympy.Matrix(a).rank()
    for v in k:
        assert all(sum(x * y for x, y in zip(row, v)) == 0 for row in a)


def test_hnf_shape():
    H = hermite_normal_form([[2, 4], [3, 5], [0, 0]], 2)
    assert H == [[1, 1], [0, 2]]
