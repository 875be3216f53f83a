import pytest

from awdaha.scalar_field import ScalarField


@pytest.fixture
def q2():
    return ScalarField.from_text("2")


@pytest.fixture
def q_symbolic():
    return ScalarField.symbolic()
