import pytest

from shnirel.golden import load_golden


@pytest.fixture(scope="session")
def golden_rows():
    return load_golden()
