import pytest


@pytest.fixture(scope="session")
def table():
    from braidbelts import seed_table

    return seed_table()
