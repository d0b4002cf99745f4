import random

import pytest

from mideal.core import MonomialIdeal, minimal_generators, power
from mideal.graphs import Graph
from mideal.parsing import parse_ideal_with_names

RP2_TEXT = "xyz,xyt,xzu,xtv,xuv,yzv,ytu,yuv,ztu,ztv"
RP2_NAMES = ("x", "y", "z", "t", "u", "v")
VERONESE_TEXT = "x1^3*x2, x1^3*x3, x1^2*x2^2, x1^2*x2*x3, x1*x2^2*x3"
# (x,y)∩(x,z)∩(x,t)∩(x,y,z,t)^2
MIXED_TEXT = "x^2, x*y, x*z, x*t, y*z*t"


def ideal(text, names=None) -> MonomialIdeal:
    return parse_ideal_with_names(text, names).ideal


@pytest.fixture(scope="session")
def J():
    return ideal(RP2_TEXT)


@pytest.fixture(scope="session")
def J2(J):
    return power(J, 2)


@pytest.fixture(scope="session")
def J3(J):
    return power(J, 3)


@pytest.fixture(scope="session")
def veronese():
    return ideal(VERONESE_TEXT)


def graph(edges_1based, n=None) -> Graph:
    return Graph.from_edges([(i - 1, j - 1) for i, j in edges_1based], n)


# x,y,z,t,u -> 1..5
TRIANGLE_TAIL = graph([(1, 2), (1, 3), (2, 3), (3, 4), (4, 5)])
TWO_TRIANGLES = graph([(1, 2), (2, 3), (1, 3), (2, 4), (3, 4), (4, 5)])


def random_ideal(rng: random.Random, n: int, max_gens: int, max_deg: int, min_deg: int = 1) -> MonomialIdeal:
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        d = rng.randint(min_deg, max_deg)
        e = [0] * n
        for _ in range(d):
            e[rng.randrange(n)] += 1
        gens.append(tuple(e))
    return minimal_generators(gens, n)


def all_small_graphs():
    """Every graph on at most 6 vertices without isolated vertices, up to isomorphism."""
    import networkx as nx

    out = []
    for H in nx.graph_atlas_g():
        if H.number_of_nodes() == 0 or H.number_of_edges() == 0:
            continue
        if any(d == 0 for _, d in H.degree()):
            continue
        out.append(Graph.from_edges(list(H.edges()), H.number_of_nodes()))
    return out


def random_graph(rng: random.Random, n: int, p: float = 0.45) -> Graph:
    while True:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        G = Graph.from_edges(edges, n)
        if edges and G.no_isolated_vertices:
            return G
