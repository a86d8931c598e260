import pytest

from twistedrs.field import Field


@pytest.fixture(scope="session")
def f16() -> Field:
    return Field.of_order(16)


@pytest.fixture(scope="session")
def f81() -> Field:
    return Field.of_order(81)


@pytest.fixture(scope="session")
def f7() -> Field:
    return Field.of_order(7)


@pytest.fixture(scope="session")
def f5() -> Field:
    return Field.of_order(5)


@pytest.fixture(scope="session")
def f4() -> Field:
    return Field.of_order(4)
