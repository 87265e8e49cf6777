"""Catalog families: frozen dimensions, axioms, determinant formula."""

import random
from fractions import Fraction

import pytest

from jordanaff import catalog, exactla as la

# (family, params) -> (dim, degree), checked against the classification
EXPECTED = {
    ("reals", ()): (1, 1),
    ("quadratic", (("signs", (1, 1)),)): (3, 2),
    ("quadratic", (("signs", (1, -1, 1)),)): (4, 2),
    ("quadratic", (("signs", (-1, -1, -1, 1)),)): (5, 2),
    ("full_real", (("m", 2),)): (4, 2),
    ("full_real", (("m", 3),)): (9, 3),
    ("full_complex", (("m", 2),)): (8, 4),
    ("full_quaternion", (("m", 2),)): (16, 4),
    ("symmetric_real", (("gammas", (1, 1)), ("m", 2))): (3, 2),
    ("symmetric_real", (("gammas", (1, 1, -1)), ("m", 3))): (6, 3),
    ("symmetric_real", (("gammas", (1, 1, 1)), ("m", 3))): (6, 3),
    ("hermitian_complex", (("gammas", (1, -1)), ("m", 2))): (4, 2),
    ("hermitian_complex", (("gammas", (1, 1, 1)), ("m", 3))): (9, 3),
    ("hermitian_quaternion", (("gammas", (1, 1)), ("m", 2))): (6, 2),
    ("hermitian_quaternion", (("gammas", (1, 1, -1)), ("m", 3))): (15, 3),
    ("skew_hamiltonian", (("m", 2),)): (6, 2),
    ("skew_hamiltonian", (("m", 3),)): (15, 3),
    ("skew_hermitian_quaternion", (("m", 2),)): (10, 4),
    ("skew_hermitian_quaternion", (("m", 3),)): (21, 6),
    ("octonion_hermitian", (("gammas", (1, 1, 1)),)): (27, 3),
    ("octonion_hermitian", (("gammas", (1, 1, -1)),)): (27, 3),
    ("split_octonion_hermitian", ()): (27, 3),
    ("complex_field", ()): (2, 2),
    ("complex_quadratic", (("m", 3),)): (6, 4),
    ("symmetric_complex", (("m", 3),)): (12, 6),
    ("skew_complex", (("m", 2),)): (12, 4),
    ("complex_octonion_hermitian", ()): (54, 6),
}


def test_desk_catalog_covers_all_families(desk_instances):
    assert len(desk_instances) == len(EXPECTED)
    families = {name for name, _ in desk_instances}
    assert len(families) == 17


def test_dimensions_and_degrees(desk_instances, get_algebra):
    for name, params in desk_instances:
        key = (name, tuple(sorted(params.items())))
        assert key in EXPECTED, key
        j = get_algebra(name, **params)
        dim, degree = EXPECTED[key]
        assert (j.dim, catalog.degree(j)) == (dim, degree), name


def test_axioms_all_families(desk_instances, get_algebra):
    for name, params in desk_instances:
        j = get_algebra(name, **params)
        res = j.check_jordan(n_samples=3, seed=0)
        assert res.passed and res.max_residual == 0, name


def test_unity_norm_and_trace(desk_instances, get_algebra):
    for name, params in desk_instances:
        j = get_algebra(name, **params)
        e = j.unity()
        assert catalog.generic_norm(j, e) == 1, name
        assert j.element_trace(e) == j.dim, name


def test_det_formula(get_algebra):
    # det P_u = (generic norm)^(2 dim / degree), spot-checked exactly
    for name, params in [("reals", {}),
                         ("quadratic", {"signs": (1, -1, 1)}),
                         ("full_real", {"m": 3}),
                         ("hermitian_quaternion", {"m": 2, "gammas": (1, 1)}),
                         ("complex_field", {}),
                         ("skew_hamiltonian", {"m": 3})]:
        j = get_algebra(name, **params)
        res = catalog.verify_det_formula(j, n_samples=4, seed=3)
        assert res.passed and res.max_residual == 0, name
        d = catalog.degree(j)
        assert res.details["exponent"] == Fraction(2 * j.dim, d)


def test_semisimple_nondegenerate_simple(get_algebra):
    for name, params in [("full_complex", {"m": 2}),
                         ("symmetric_complex", {"m": 3}),
                         ("split_octonion_hermitian", {})]:
        j = get_algebra(name, **params)
        ok, inertia = j.is_semisimple()
        assert ok and inertia[2] == 0, name
        assert j.is_nondegenerate(), name
        assert len(j.decompose(seed=0)) == 1, name


def test_center_matches_base_field(get_algebra):
    # real-simple families have 1-dim center, complexified ones 2-dim
    assert len(get_algebra("octonion_hermitian",
                           gammas=(1, 1, 1)).center()) == 1
    assert len(get_algebra("complex_field").center()) == 2
    assert len(get_algebra("skew_complex", m=2).center()) == 2


def test_matrix_form_of_unity(get_algebra):
    j = get_algebra("full_real", m=3)
    _, mat = catalog.matrix_form(j, j.unity())
    flat = [[entry[0] for entry in row] for row in mat]
    assert flat == [list(row) for row in la.identity(3)]


def test_quadratic_norm_is_quadratic(get_algebra):
    j = get_algebra("quadratic", signs=(-1, -1, -1, 1))
    rng = random.Random(5)
    u = j.random_element(rng, bound=6)
    n1 = catalog.generic_norm(j, u)
    n2 = catalog.generic_norm(j, [2 * x for x in u])
    assert n2 == 4 * n1


def test_unknown_family_rejected():
    with pytest.raises(catalog.UnknownFamilyError):
        catalog.build("full_sedenion", m=2)
    with pytest.raises(catalog.BadParameterError):
        catalog.build("full_real", m=0)
    with pytest.raises(catalog.BadParameterError):
        catalog.build("quadratic", signs=(1, 0))
