import pytest

from sl2green.labels import PrimeContext


@pytest.fixture
def ctx5():
    return PrimeContext(5)


@pytest.fixture
def ctx7():
    return PrimeContext(7)


@pytest.fixture
def ctx3():
    return PrimeContext(3)


@pytest.fixture(params=[3, 5, 7, 11, 13])
def ctx_small(request):
    return PrimeContext(request.param)
