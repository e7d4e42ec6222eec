import pytest

from piperfect.core import ExplicitCode, LinearCode, TwoValuedProfile, WeightVector

# The worked 3 x 6 parity-check matrix and its eight codewords.
EXAMPLE_H_ROWS = ["100101", "010011", "001111"]
EXAMPLE_CODEWORDS = ["000000", "001111", "101100", "100011", "011010", "010101", "111001", "110110"]


@pytest.fixture
def example_H():
    return LinearCode.parse("\n".join(EXAMPLE_H_ROWS))


@pytest.fixture
def example_code():
    return ExplicitCode.parse("\n".join(EXAMPLE_CODEWORDS))


@pytest.fixture
def example_profile():
    return TwoValuedProfile(6, 2)


@pytest.fixture
def example_pi():
    return WeightVector((1, 1, 2, 2, 2, 2))
