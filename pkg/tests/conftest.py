import pytest

from puzzle8 import bfs_distance_oracle


@pytest.fixture(scope="session")
def oracle():
    """Exact optimal distances for every solvable 3x3 board."""
    return bfs_distance_oracle(3)
