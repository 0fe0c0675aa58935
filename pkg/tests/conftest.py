"""Shared fixtures: small named trees used throughout the suite."""

import pytest

from insetedge import Tree


def path_tree(n: int) -> Tree:
    return Tree.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(n: int) -> Tree:
    return Tree.from_edges(n, [(0, i) for i in range(1, n)])


def spider_tree() -> Tree:
    # 5 vertices: path 0-1-2-3 with an extra leaf 4 hanging off 0
    return Tree.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4)])


@pytest.fixture
def p4():
    return path_tree(4)


@pytest.fixture
def p5():
    return path_tree(5)


@pytest.fixture
def p6():
    return path_tree(6)


@pytest.fixture
def p7():
    return path_tree(7)


@pytest.fixture
def s4():
    return star_tree(4)


@pytest.fixture
def s5():
    return star_tree(5)


@pytest.fixture
def spider():
    return spider_tree()
