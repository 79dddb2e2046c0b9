import pytest

from ury import build_prefix, truncate_prefix


@pytest.fixture(scope="session")
def prefix300():
    return build_prefix(300)


@pytest.fixture(scope="session")
def prefix200(prefix300):
    return truncate_prefix(prefix300, 200)


@pytest.fixture(scope="session")
def prefix50(prefix300):
    return truncate_prefix(prefix300, 50)
