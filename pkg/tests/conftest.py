import pytest

from coringlab.examples import aomega_instance, trig_instance


@pytest.fixture(scope="session")
def ao2():
    return aomega_instance(2)


@pytest.fixture(scope="session")
def ao3():
    return aomega_instance(3)


@pytest.fixture(scope="session")
def trig():
    return trig_instance()
