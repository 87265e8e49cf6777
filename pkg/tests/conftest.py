import pytest

from fractions import Fraction

from jordanaff import catalog
from jordanaff.hypersurface import build_model
from jordanaff.structure import restricted_pair


def _key(name, params):
    return (name, tuple(sorted(params.items())))


@pytest.fixture(scope="session")
def get_algebra():
    """Session-wide cache of catalog builds (they are immutable)."""
    cache = {}

    def _get(name, **params):
        k = _key(name, params)
        if k not in cache:
            cache[k] = catalog.build(name, **params)
        return cache[k]

    return _get


@pytest.fixture(scope="session")
def get_pair(get_algebra):
    cache = {}

    def _get(name, **params):
        k = _key(name, params)
        if k not in cache:
            cache[k] = restricted_pair(get_algebra(name, **params))
        return cache[k]

    return _get


@pytest.fixture(scope="session")
def get_model(get_algebra):
    cache = {}

    def _get(name, l1=Fraction(-1), **params):
        k = (_key(name, params), Fraction(l1))
        if k not in cache:
            cache[k] = build_model(get_algebra(name, **params),
                                   Fraction(l1))
        return cache[k]

    return _get


@pytest.fixture(scope="session")
def desk_instances():
    return catalog.desk_catalog()
