"""Cayley-Dickson arithmetic: composition law, alternativity, conjugation.

The composition law n(xy) = n(x) n(y) is the load-bearing property: it
is what makes the norm forms of the matrix algebras multiplicative.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jordanaff import composition_algebras as ca

SIGS = [ca.REALS, ca.COMPLEXES, ca.QUATERNIONS, ca.SPLIT_QUATERNIONS,
        ca.OCTONIONS, ca.SPLIT_OCTONIONS]


def _elt(sig, ints):
    return tuple(Fraction(x) for x in ints[:sig.dim])


coords = st.lists(st.integers(-7, 7), min_size=8, max_size=8)


@pytest.mark.parametrize("sig", SIGS, ids=lambda s: s.name)
@given(xs=coords, ys=coords)
@settings(max_examples=40, deadline=None)
def test_composition_law(sig, xs, ys):
    x, y = _elt(sig, xs), _elt(sig, ys)
    assert ca.cd_norm(sig, ca.cd_mul(sig, x, y)) == \
        ca.cd_norm(sig, x) * ca.cd_norm(sig, y)


@pytest.mark.parametrize("sig", SIGS, ids=lambda s: s.name)
@given(xs=coords, ys=coords)
@settings(max_examples=30, deadline=None)
def test_alternative_laws(sig, xs, ys):
    x, y = _elt(sig, xs), _elt(sig, ys)
    xx = ca.cd_mul(sig, x, x)
    assert ca.cd_mul(sig, xx, y) == ca.cd_mul(sig, x, ca.cd_mul(sig, x, y))
    yy = ca.cd_mul(sig, y, y)
    assert ca.cd_mul(sig, x, yy) == ca.cd_mul(sig, ca.cd_mul(sig, x, y), y)


@pytest.mark.parametrize("sig", SIGS, ids=lambda s: s.name)
@given(xs=coords, ys=coords)
@settings(max_examples=30, deadline=None)
def test_conjugation_antiautomorphism(sig, xs, ys):
    x, y = _elt(sig, xs), _elt(sig, ys)
    lhs = ca.cd_conj(sig, ca.cd_mul(sig, x, y))
    rhs = ca.cd_mul(sig, ca.cd_conj(sig, y), ca.cd_conj(sig, x))
    assert lhs == rhs


@pytest.mark.parametrize("sig", SIGS, ids=lambda s: s.name)
def test_unit_and_norm_of_units(sig):
    one = tuple(Fraction(1 if i == 0 else 0) for i in range(sig.dim))
    x = tuple(Fraction(i + 1) for i in range(sig.dim))
    assert ca.cd_mul(sig, one, x) == x
    assert ca.cd_mul(sig, x, one) == x
    assert ca.cd_norm(sig, one) == 1
    # x conj(x) = n(x) 1
    prod = ca.cd_mul(sig, x, ca.cd_conj(sig, x))
    assert prod[0] == ca.cd_norm(sig, x)
    assert all(c == 0 for c in prod[1:])


def test_quaternions_associative_octonions_not():
    q = ca.QUATERNIONS
    a = _elt(q, [1, 2, -1, 3])
    b = _elt(q, [0, 1, 1, -2])
    c = _elt(q, [2, 0, 3, 1])
    assert ca.cd_mul(q, ca.cd_mul(q, a, b), c) == \
        ca.cd_mul(q, a, ca.cd_mul(q, b, c))

    o = ca.OCTONIONS
    # basis units e1 (e2 e4) vs (e1 e2) e4 differ in sign
    e = [tuple(Fraction(1 if i == k else 0) for i in range(8))
         for k in range(8)]
    lhs = ca.cd_mul(o, e[1], ca.cd_mul(o, e[2], e[4]))
    rhs = ca.cd_mul(o, ca.cd_mul(o, e[1], e[2]), e[4])
    assert lhs != rhs


def test_octonion_norm_signature():
    # positive definite for the division octonions, split (4, 4) otherwise
    o, s = ca.OCTONIONS, ca.SPLIT_OCTONIONS
    for k in range(8):
        e = tuple(Fraction(1 if i == k else 0) for i in range(8))
        assert ca.cd_norm(o, e) == 1
    split_signs = sorted(ca.cd_norm(s, tuple(
        Fraction(1 if i == k else 0) for i in range(8))) for k in range(8))
    assert split_signs == [-1] * 4 + [1] * 4


def test_split_quaternion_matrix_iso():
    sq = ca.SPLIT_QUATERNIONS
    a = _elt(sq, [1, -2, 3, 5])
    b = _elt(sq, [-1, 4, 0, 2])
    ma = ca.split_quaternion_to_matrix(a)
    mb = ca.split_quaternion_to_matrix(b)
    prod = [[sum(ma[i][k] * mb[k][j] for k in range(2)) for j in range(2)]
            for i in range(2)]
    assert ca.matrix_to_split_quaternion(prod) == ca.cd_mul(sq, a, b)


def test_check_helpers_pass():
    for sig in SIGS:
        ok, failures = ca.check_composition(sig, n_samples=50, seed=3)
        assert ok, (sig.name, failures)
        ok, failures = ca.check_alternativity(sig, n_samples=50, seed=4)
        assert ok, (sig.name, failures)
