"""Core engine behavior on hand-built and catalog algebras."""

import random
from fractions import Fraction

import numpy as np
import pytest

from jordanaff import catalog
from jordanaff.jordan import (
    DimensionMismatchError,
    JordanAlgebra,
    NotInvertibleError,
    NotUnitalError,
    direct_sum,
)

F = Fraction


def dual_numbers():
    """R[t]/(t^2): unital, commutative, associative, not semisimple."""
    c = [[[F(1), F(0)], [F(0), F(1)]],
         [[F(0), F(1)], [F(0), F(0)]]]
    return JordanAlgebra(c, name="dual_numbers")


def broken_tensor():
    # commutative but fails the Jordan identity
    c = [[[F(0), F(0)], [F(-1), F(0)]],
         [[F(-1), F(0)], [F(1), F(0)]]]
    return JordanAlgebra(c, name="broken")


def asymmetric_tensor():
    c = [[[F(1), F(0)], [F(0), F(1)]],
         [[F(1), F(1)], [F(0), F(0)]]]
    return JordanAlgebra(c, name="asymmetric")


def test_axioms_pass_on_matrix_algebra(get_algebra):
    j = get_algebra("full_real", m=3)
    res = j.check_jordan(n_samples=5, seed=1)
    assert res.passed
    assert res.max_residual == 0


def test_axioms_fail_with_witness():
    res = asymmetric_tensor().check_jordan()
    assert not res.passed
    assert res.details["commutativity_witness"] == (0, 1)
    res = broken_tensor().check_jordan()
    assert not res.passed
    assert res.details["jordan_identity_residual"] > 0


def test_unity_and_inverse(get_algebra):
    j = get_algebra("full_real", m=2)
    e = j.unity()
    rng = random.Random(3)
    u = j.random_element(rng, bound=5)
    assert j.product(e, u) == u
    w = j.invert(u)
    assert j.product(u, w) == e
    # P_u u^{-1} = u
    pu = j.p_operator(u)
    from jordanaff import exactla as la
    assert la.mat_vec(pu, w) == u


def test_invert_singular_raises(get_algebra):
    j = get_algebra("full_real", m=2)
    # the idempotent E_11 has det 0
    u = [F(1), F(0), F(0), F(0)]
    with pytest.raises(NotInvertibleError):
        j.invert(u)


def test_not_unital():
    # 1-dim algebra with x o x = 0 has no unit
    j = JordanAlgebra([[[F(0)]]], name="nilpotent_line")
    with pytest.raises(NotUnitalError):
        j.unity()


def test_dimension_mismatch(get_algebra):
    j = get_algebra("reals")
    with pytest.raises(DimensionMismatchError):
        j.product([F(1), F(2)], [F(1)])


def test_element_trace_and_det(get_algebra):
    j = get_algebra("full_real", m=2)
    e = j.unity()
    assert j.element_trace(e) == j.dim
    assert j.element_det(e) == 1
    rng = random.Random(9)
    u = j.random_element(rng, bound=4)
    # det P_u is multiplicative under P-composition with itself
    assert j.element_det(u) >= 0 or j.element_det(u) < 0  # defined
    # trace is linear
    v = j.random_element(rng, bound=4)
    s = tuple(a + b for a, b in zip(u, v))
    assert j.element_trace(s) == j.element_trace(u) + j.element_trace(v)


def test_trace_form_associative(get_algebra):
    j = get_algebra("hermitian_complex", m=3, gammas=(1, 1, 1))
    rng = random.Random(17)
    for _ in range(5):
        u, v, w = (j.random_element(rng, bound=4) for _ in range(3))
        lhs = j.trace_form(j.product(u, v), w)
        rhs = j.trace_form(u, j.product(v, w))
        assert lhs == rhs


def test_semisimple_and_degenerate(get_algebra):
    j = get_algebra("skew_hamiltonian", m=2)
    ok, inertia = j.is_semisimple()
    assert ok
    assert inertia[2] == 0
    assert j.is_nondegenerate()

    d = dual_numbers()
    ok, inertia = d.is_semisimple()
    assert not ok
    assert inertia[2] == 1
    assert d.unity() == (F(1), F(0))


def test_fundamental_formula(get_algebra):
    for name, params in [("full_quaternion", {"m": 2}),
                         ("quadratic", {"signs": (1, -1, 1)})]:
        res = get_algebra(name, **params).check_fundamental(
            n_samples=6, seed=2)
        assert res.passed and res.max_residual == 0


def test_triple_identities(get_algebra):
    for name, params in [("full_real", {"m": 3}),
                         ("skew_hermitian_quaternion", {"m": 2})]:
        res = get_algebra(name, **params).check_triple(
            n_samples=25, seed=4)
        assert res.passed, res.details
        assert res.max_residual == 0


def test_self_adjoint_and_inverse_identities(get_algebra):
    j = get_algebra("symmetric_real", m=3, gammas=(1, 1, -1))
    assert j.check_self_adjoint(n_samples=30, seed=5).passed
    res = j.check_inverse_identities(n_samples=15, seed=6)
    assert res.passed and res.samples == 15


def test_isotope_is_jordan(get_algebra):
    j = get_algebra("full_real", m=2)
    gamma = (F(1), F(0), F(0), F(-2))  # invertible diag(1, -2)
    iso = j.isotope(gamma)
    assert iso.check_jordan(n_samples=4, seed=7).passed
    e = iso.unity()
    assert iso.product(e, iso.basis_element(1)) == iso.basis_element(1)


def test_direct_sum_blocks(get_algebra):
    a = get_algebra("reals")
    b = get_algebra("quadratic", signs=(1, 1))
    s = direct_sum([a, b])
    assert s.dim == 4
    assert s.check_jordan(n_samples=4, seed=8).passed
    # cross products vanish
    x = s.product(s.basis_element(0), s.basis_element(2))
    assert all(v == 0 for v in x)
    ok, _ = s.is_semisimple()
    assert ok


def test_decompose_direct_sums(get_algebra):
    pieces = [("full_real", {"m": 2}),
              ("quadratic", {"signs": (1, -1, 1)}),
              ("reals", {})]
    s = direct_sum([catalog.build(n, **p) for n, p in pieces])
    parts = s.decompose(seed=0)
    dims = sorted(p.dim for p, _ in parts)
    assert dims == [1, 4, 4]
    for part, _ in parts:
        assert part.check_jordan(n_samples=3, seed=1).passed
        ok, _ = part.is_semisimple()
        assert ok


def test_simple_catalog_algebra_is_simple(get_algebra):
    j = get_algebra("hermitian_quaternion", m=2, gammas=(1, 1))
    parts = j.decompose(seed=0)
    assert len(parts) == 1
    assert parts[0][0].dim == j.dim


def test_center_dimension(get_algebra):
    assert len(get_algebra("full_real", m=3).center()) == 1
    # complexified algebras have a 2-dimensional center over R
    assert len(get_algebra("complex_quadratic", m=3).center()) == 2


def test_float_mode_roundtrip(get_algebra):
    j = get_algebra("quadratic", signs=(1, 1)).to_float()
    res = j.check_jordan(n_samples=6, seed=9)
    assert res.passed
    rng = np.random.default_rng(1)
    u = rng.uniform(-2, 2, j.dim)
    w = j.invert(u + np.array([3.0, 0, 0]))  # shifted to stay invertible
    e = j.unity()
    assert np.allclose(j.product(u + np.array([3.0, 0, 0]), w), e)
