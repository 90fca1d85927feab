from __future__ import annotations

import pytest

from src.affine import Hyperplane, identity
from src.gallery import from_walls
from src.root_system import Root, build


@pytest.fixture(scope="session")
def a1():
    return build("A1")


@pytest.fixture(scope="session")
def a2():
    return build("A2")


@pytest.fixture(scope="session")
def b2():
    return build("B2")


@pytest.fixture(scope="session")
def g2():
    return build("G2")


def roots_of(*coeffs):
    return tuple(Root(tuple(c)) for c in coeffs)


@pytest.fixture(scope="session")
def a2_long_gallery(a2):
    """Unfolded A2 gallery of nine steps alternating theta- and alpha1-walls, ending across H(a2, 0)"""
    theta, alpha1, alpha2 = Root((1, 1)), Root((1, 0)), Root((0, 1))
    walls = []
    for level in range(1, 5):
        walls += [Hyperplane(theta, level), Hyperplane(alpha1, level)]
    walls.append(Hyperplane(alpha2, 0))
    return from_walls(identity(a2), walls)


@pytest.fixture(scope="session")
def b2_gallery(b2):
    """Unfolded B2 gallery of five steps ending in the chamber of s1"""
    a1, a2_ = Root((1, 0)), Root((0, 1))
    a3, a0 = Root((1, 1)), Root((2, 1))
    walls = [Hyperplane(a1, 0), Hyperplane(a2_, 1), Hyperplane(a3, 1), Hyperplane(a0, 1), Hyperplane(a2_, 2)]
    return from_walls(identity(b2), walls)
