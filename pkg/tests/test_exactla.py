"""Exact linear algebra against independent oracles.

Determinants are cross-checked with sympy's Matrix.det on the same
rational data, ranks against sympy's rank, and inertia counts against
numpy's eigenvalue signs on integer symmetric matrices.
"""

import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from jordanaff import exactla as la


def _rand_fmat(rng, n, bound=9, den=4):
    return [[Fraction(rng.randint(-bound, bound), rng.randint(1, den))
             for _ in range(n)] for _ in range(n)]


def _sympy_det(rows):
    m = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator)
                       for x in r] for r in rows])
    return m.det()


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
def test_det_matches_sympy(n):
    rng = random.Random(100 + n)
    for _ in range(6):
        a = _rand_fmat(rng, n)
        got = la.det(a)
        want = _sympy_det(a)
        assert got == Fraction(int(want.p), int(want.q))


def test_det_singular():
    a = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    assert la.det(a) == 0


@given(st.lists(st.lists(st.integers(-50, 50), min_size=3, max_size=3),
                min_size=3, max_size=3))
@settings(max_examples=60, deadline=None)
def test_det_multiplicative_3x3(rows):
    a = [[Fraction(x) for x in r] for r in rows]
    b = [[Fraction(1, 2), Fraction(3), Fraction(0)],
         [Fraction(-2), Fraction(1), Fraction(5)],
         [Fraction(0), Fraction(1, 3), Fraction(-1)]]
    ab = la.mat_mul(a, b)
    assert la.det(ab) == la.det(a) * la.det(b)


def test_solve_and_inverse():
    rng = random.Random(7)
    for n in (2, 3, 5):
        a = _rand_fmat(rng, n)
        while la.det(a) == 0:
            a = _rand_fmat(rng, n)
        b = [Fraction(rng.randint(-9, 9)) for _ in range(n)]
        x = la.solve(a, b)
        assert la.mat_vec(a, x) == tuple(b)
        inv = la.inverse(a)
        prod = la.mat_mul(a, inv)
        ident = la.identity(n)
        assert prod == ident


def test_solve_singular_returns_none():
    a = [[Fraction(1), Fraction(1)], [Fraction(1), Fraction(1)]]
    assert la.solve(a, [Fraction(1), Fraction(0)]) is None


def test_null_space_annihilates():
    rng = random.Random(11)
    a = _rand_fmat(rng, 4)
    a[3] = [x + y for x, y in zip(a[0], a[1])]  # force a relation
    rows_as_int, _ = la.clear_denominators(a)
    ns = la.null_space(a)
    assert len(ns) >= 1
    for v in ns:
        out = la.mat_vec(a, v)
        assert all(x == 0 for x in out)


def _sympy_rank(m):
    return sympy.Matrix(m).rank()


def test_int_rank_matches_sympy():
    rng = random.Random(23)
    for rows, cols in [(3, 5), (6, 4), (8, 8)]:
        m = [[rng.randint(-20, 20) for _ in range(cols)]
             for _ in range(rows)]
        if rows >= 3:
            m[-1] = [2 * a - b for a, b in zip(m[0], m[1])]
        assert la.int_rank(m) == _sympy_rank(m)


def test_independent_rows_certified():
    m = [[1, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 0], [5, -3, 0]]
    idx, r = la.independent_rows(m)
    assert r == 2
    assert len(idx) == 2
    assert la.int_rank([m[i] for i in idx]) == 2


def test_inertia_matches_eigenvalues():
    rng = random.Random(31)
    for n in (2, 4, 6):
        m = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1):
                m[i][j] = m[j][i] = rng.randint(-6, 6)
        frac = [[Fraction(x) for x in r] for r in m]
        pos, neg, zero = la.inertia(frac)
        w = np.linalg.eigvalsh(np.array(m, dtype=float))
        tol = 1e-9 * max(1.0, float(np.max(np.abs(w))))
        assert pos == int(np.sum(w > tol))
        assert neg == int(np.sum(w < -tol))
        assert zero == int(np.sum(np.abs(w) <= tol))


def test_int_matmul_big_entries_exact():
    big = 2 ** 40
    a = [[big, 1], [0, big]]
    b = [[big, 0], [1, big]]
    out = la.int_matmul(a, b)
    rows = out.tolist() if hasattr(out, "tolist") else out
    assert rows[0][0] == big * big + 1
    assert rows[1][1] == big * big


def test_int_mat_vec_overflow_path():
    a = [[2 ** 45, 1], [1, 2 ** 45]]
    v = [2 ** 45, -1]
    out = la.int_mat_vec(a, v)
    assert out[0] == 2 ** 90 - 1


def test_solve_tall_consistency():
    cols = [(Fraction(1), Fraction(0), Fraction(2)),
            (Fraction(0), Fraction(1), Fraction(-1))]
    rows = [tuple(c[i] for c in cols) for i in range(3)]
    rhs = (Fraction(3), Fraction(4), Fraction(2))
    sol = la.solve_tall(rows, rhs)
    assert sol == (Fraction(3), Fraction(4))
    bad = (Fraction(1), Fraction(0), Fraction(0))
    assert la.solve_tall(rows, bad) is None


class TestGaussianInteger:
    def test_field_ops(self):
        a = la.QI(Fraction(1), Fraction(2))
        b = la.QI(Fraction(3), Fraction(-1))
        assert a + b == la.QI(Fraction(4), Fraction(1))
        assert a * b == la.QI(Fraction(5), Fraction(5))
        assert (a / b) * b == a
        assert a - a == la.QI(Fraction(0), Fraction(0))

    def test_scalar_coercion(self):
        a = la.QI(Fraction(2), Fraction(1))
        assert 1 + a == la.QI(Fraction(3), Fraction(1))
        assert Fraction(1, 2) * a == la.QI(Fraction(1), Fraction(1, 2))
        assert (a / 2) * 2 == a

    @given(st.integers(-9, 9), st.integers(-9, 9),
           st.integers(-9, 9), st.integers(-9, 9))
    @settings(max_examples=80, deadline=None)
    def test_norm_multiplicative(self, ar, ai, br, bi):
        a = la.QI(Fraction(ar), Fraction(ai))
        b = la.QI(Fraction(br), Fraction(bi))
        assert (a * b).norm() == a.norm() * b.norm()
