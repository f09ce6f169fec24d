import random

import pytest

from skewopt.graph import build_graph, complete_graph, cycle_graph, hypercube, path_graph, u_graph


def random_graph(rng: random.Random, n: int, p: float):
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def random_perm(rng: random.Random, n: int):
    p = list(range(n))
    rng.shuffle(p)
    return p


def octahedron():
    return build_graph(6, [(i, j) for i in range(6) for j in range(i + 1, 6) if j != i + 3])


def prism3():
    return build_graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def small_graphs():
    return {
        "K2": path_graph(2),
        "P3": path_graph(3),
        "C4": cycle_graph(4),
        "C5": cycle_graph(5),
        "K4": complete_graph(4),
        "K6": complete_graph(6),
        "Q3": hypercube(3),
        "U3": u_graph(3),
        "U4": u_graph(4),
        "prism": prism3(),
    }
