"""
Pytest configuration and fixtures for bott-spinc tests
"""

import pytest

from bott_spinc.config import Settings
from bott_spinc.core import BottMatrix, parse
from bott_spinc.di_container import DIContainer
from bott_spinc.oracles import CombinatorialOracle, ISpincOracle

A5_TEXT = """\
# running example: rows of weight 2, 2, 2, 0, 0
0 1 1 0 0
0 0 1 1 0
0 0 0 1 1
0 0 0 0 0
0 0 0 0 0
"""


class FlippedOracle(ISpincOracle):
    """Combinatorial oracle with the answer negated when n = 5 and A_(3) != 0"""

    @property
    def name(self) -> str:
        return "flipped"

    def decide(self, matrix: BottMatrix) -> bool:
        answer = CombinatorialOracle().decide(matrix)
        if matrix.n == 5 and matrix.row(3) != 0:
            return not answer
        return answer


@pytest.fixture
def a5_text():
    """Text of the five-dimensional example matrix"""
    return A5_TEXT


@pytest.fixture
def a5():
    """Orientable, neither spin nor spin^c"""
    return parse(A5_TEXT)


@pytest.fixture
def sparse5():
    """n=5 with only a12 = a13 = 1"""
    return BottMatrix.from_entries(5, [(1, 2), (1, 3)])


@pytest.fixture
def zero4():
    """The four-torus"""
    return BottMatrix.zero(4)


@pytest.fixture
def non_orientable3():
    """n=3 with only a12 = 1"""
    return BottMatrix.from_entries(3, [(1, 2)])


@pytest.fixture
def test_settings():
    """Settings independent of the environment"""
    return Settings(
        workers=1,
        log_level="warning",
        output_format="table",
        spinc_oracle="combinatorial",
        verify_seed=0,
        verify_samples=5,
    )


@pytest.fixture
def container(test_settings):
    """DI container built from test settings"""
    return DIContainer(test_settings)


@pytest.fixture
def corrupted_oracles():
    """A correct oracle paired with a deliberately wrong one"""
    return [CombinatorialOracle(), FlippedOracle()]
