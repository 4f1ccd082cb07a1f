import pytest

from milnorreg.polyring import QQ, Ring


@pytest.fixture
def R():
    return Ring(4)


@pytest.fixture
def RQ():
    return Ring(4, QQ)
