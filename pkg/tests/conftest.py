import pytest

from hochlinf import fixtures


@pytest.fixture(scope="session")
def algebras():
    return {A.name: A for A in fixtures.all_fixtures()}


@pytest.fixture(params=[A.name for A in fixtures.all_fixtures()])
def any_algebra(request, algebras):
    return algebras[request.param]
