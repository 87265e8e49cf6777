"""Hypersurface models: scale constants, metric, Gauss data, levels."""

import math
from fractions import Fraction

import numpy as np
import pytest

from jordanaff import catalog, hypersurface as hs
from jordanaff.hypersurface import (
    ModelError,
    adapted_constants,
    build_model,
    reconstruct_algebra,
    scale_constant,
    verify_model,
)
from jordanaff.jordan import direct_sum

F = Fraction


def test_scale_constant_frozen():
    # n = 0: C^2 = 1/|L1|^2
    assert scale_constant(0, F(-1))[0] == 1
    assert scale_constant(0, F(2))[0] == F(1, 4)
    # the sign tracks the branch: opposite to L1
    assert scale_constant(0, F(2))[2] == -1
    assert scale_constant(0, F(-1))[2] == 1
    # n = 1 hyperbola: C^2 = 1/4 at L1 = -1
    assert scale_constant(1, F(-1))[0] == F(1, 4)
    with pytest.raises(ModelError):
        scale_constant(2, F(0))


def test_hyperbola_model(get_algebra):
    rr = direct_sum([get_algebra("reals"), get_algebra("reals")])
    m = build_model(rr, l1=F(-1))
    assert m.n == 1
    assert m.c_squared == F(1, 4)
    assert m.level_value == F(1, 16)
    # points on x*y = 1/4, positive branch
    pts = m.sample_points(count=12, seed=0)
    for p in pts:
        assert math.isclose(p[0] * p[1], 0.25, rel_tol=1e-12)
        assert p[0] > 0 and p[1] > 0
    normal = m.affine_normal()
    assert np.allclose(normal["vector_float"], [0.5, 0.5])


def test_level_and_signature_frozen(get_model):
    m = get_model("quadratic", signs=(1, 1))
    assert m.c_squared == F(1, 27)
    assert m.level_value == F(1, 27) ** 3
    assert m.metric_signature() == (2, 0, 0)

    m = get_model("quadratic", signs=(1, -1, 1))
    assert m.metric_signature() == (2, 1, 0)

    m = get_model("octonion_hermitian", gammas=(1, 1, 1))
    assert m.metric_signature() == (26, 0, 0)


def test_verify_model_spread(get_algebra):
    cases = [("reals", {}, F(1)), ("reals", {}, F(-1)),
             ("quadratic", {"signs": (1, 1)}, F(-1)),
             ("quadratic", {"signs": (1, -1, 1)}, F(2)),
             ("full_real", {"m": 2}, F(-1)),
             ("complex_field", {}, F(-1)),
             ("hermitian_complex", {"m": 2, "gammas": (1, -1)}, F(1)),
             ("skew_hamiltonian", {"m": 2}, F(-1))]
    for name, params, l1 in cases:
        j = get_algebra(name, **params)
        model, rep = verify_model(j, l1, n_float_samples=4, seed=0)
        assert rep.passed, (name, l1, rep.to_jsonable())
        assert model.c_squared > 0


def test_gauss_and_cubic_exact(get_model):
    for name, params in [("quadratic", {"signs": (1, -1, 1)}),
                         ("full_real", {"m": 2}),
                         ("hermitian_quaternion", {"m": 2,
                                                   "gammas": (1, 1)})]:
        m = get_model(name, **params)
        assert m.check_gauss().max_residual == 0, name
        assert m.check_cubic_form().max_residual == 0, name
        assert m.check_difference_tensor().max_residual == 0, name
        assert m.check_metric().max_residual == 0, name


def test_level_samples(get_model):
    m = get_model("full_real", m=2)
    res = m.check_level(count=10, seed=1)
    assert res.passed
    assert res.max_residual <= 1e-9


def test_quadratic_expansion_exact(get_model):
    m = get_model("quadratic", signs=(1, 1))
    res = m.check_quadratic_expansion()
    assert res.passed
    assert res.max_residual == 0
    assert res.details["first_order_trace"] == 0


def test_reconstruction_roundtrip(get_model):
    for name, params in [("full_real", {"m": 2}),
                         ("quadratic", {"signs": (1, -1, 1)}),
                         ("complex_field", {})]:
        m = get_model(name, **params)
        rebuilt = reconstruct_algebra(m)
        assert rebuilt.c == adapted_constants(m), name
        assert m.check_reconstruction().passed


def test_model_rejects_bad_inputs(get_algebra):
    with pytest.raises(ModelError):
        build_model(get_algebra("reals").to_float(), l1=F(-1))
    # a non-semisimple algebra has no nondegenerate model
    from jordanaff.jordan import JordanAlgebra
    dual = JordanAlgebra([[[F(1), F(0)], [F(0), F(1)]],
                          [[F(0), F(1)], [F(0), F(0)]]], name="dual")
    with pytest.raises(ModelError):
        build_model(dual, l1=F(-1))
    with pytest.raises(ModelError):
        build_model(get_algebra("reals"), l1=F(0))


def test_log_level_matches_exact(get_model):
    m = get_model("hermitian_complex", m=3, gammas=(1, 1, 1))
    assert math.isclose(m.log_level_value(),
                        math.log(float(m.c_squared)) * (m.n + 1),
                        rel_tol=1e-12)
