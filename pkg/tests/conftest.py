import random

import networkx as nx
import pytest

from selfdual.algorithms import algorithm1, algorithm2, self_dual_family
from selfdual.embedding import build
from selfdual.seeds import h5_seed, tetrahedron, wheel


def embed(edges):
    """Sphere embedding of a 3-connected edge list, via networkx."""
    G = nx.Graph(edges)
    ok, emb = nx.check_planarity(G)
    assert ok
    nodes = sorted(G)
    return build(len(nodes), [list(reversed(list(emb.neighbors_cw_order(v)))) for v in nodes])


def cube():
    return embed([(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)])


def octahedron():
    return embed([(u, v) for u in range(6) for v in range(u + 1, 6) if v != u + 3 or u >= 3])


def k24():
    """K(2,4) as a quadrangulation: parts {0, 1} and {2, 3, 4, 5}."""
    return build(6, [[2, 3, 4, 5], [5, 4, 3, 2], [0, 1], [0, 1], [0, 1], [0, 1]])


def random_tuples(count, seed, max_k=6, lo=4, hi=9):
    rng = random.Random(seed)
    return [tuple(rng.randint(lo, hi) for _ in range(rng.randint(0, max_k))) for _ in range(count)]


@pytest.fixture(scope="session")
def corpus():
    """Polyhedral graphs built by every construction, keyed by a name."""
    out = {"tetrahedron": tetrahedron(), "cube": cube(), "octahedron": octahedron(), "h5": h5_seed()}
    for p in range(4, 11):
        out[f"wheel{p}"] = wheel(p)
    for n in range(3, 16):
        out[f"G{n}"] = self_dual_family(n)
    for n, h in enumerate(algorithm1(15), start=6):
        out[f"H{n}"] = h
    for t in random_tuples(25, seed=7):
        out[f"G{t}"] = algorithm2(t)
    return out
