import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from flagdomains.rootsys import LieType, build_root_system, from_cartan_matrix

CLASSICAL = [
    ("A", 1),
    ("A", 2),
    ("A", 3),
    ("B", 2),
    ("B", 3),
    ("C", 2),
    ("C", 3),
    ("D", 4),
]


@pytest.fixture(scope="session")
def systems():
    return {(f, r): build_root_system(LieType(f, r)) for f, r in CLASSICAL}


@pytest.fixture(scope="session")
def a2(systems):
    return systems[("A", 2)]


@pytest.fixture(scope="session")
def c2(systems):
    return systems[("C", 2)]


@pytest.fixture(scope="session")
def b2(systems):
    return systems[("B", 2)]


@pytest.fixture(scope="session")
def so5_labeled():
    """The rank-two system in the orientation with roots s1, s2, s1+s2, 2s1+s2."""
    return from_cartan_matrix([[2, -1], [-2, 2]])
