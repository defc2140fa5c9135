"""Constructions: the non-self-dual family H_n, the self-dual G(T), and a
direct edge-list construction of G_n used as an independent oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

import networkx as nx

from selfdual.embedding import PlaneGraph, _trusted, build
from selfdual.errors import BadN, EntryBelowFour, InvalidPosition
from selfdual.radial import QuadGraph, primal, radial
from selfdual.seeds import h5_seed, tetrahedron
from selfdual.splitting import PPosition, SplitTriple, on_triangle, p_move, p_roles, split_in_place

# Starting triples for H_6, as (v1, v4, v6), (v5, v1, v7), (v6, v1, v5).
H_START_TRIPLES = ((0, 3, 5), (4, 0, 6), (5, 0, 4))


def minimal_order(n: int) -> int:
    """Least order of a polyhedron with every vertex degree and face size 3..n."""
    if n < 3:
        raise BadN(f"n must be >= 3, got {n}")
    return (n * n - 5 * n + 14) // 2


def _check_tuple(T: Sequence[int]) -> tuple[int, ...]:
    T = tuple(int(t) for t in T)
    for t in T:
        if t < 4:
            raise EntryBelowFour(f"tuple entries must be >= 4, got {t}")
    return T


def admissible_sequence(T: Sequence[int]) -> tuple[int, ...]:
    """The degree sequence ``t_1, ..., t_k, 3^m`` with ``m = 4 + sum(t_i - 4)``.

    Returned sorted in descending order, like :func:`degree_sequence`.
    """
    T = _check_tuple(T)
    m = 4 + sum(t - 4 for t in T)
    return tuple(sorted(T, reverse=True)) + (3,) * m


def expected_order(T: Sequence[int]) -> int:
    return 4 + sum(t - 3 for t in _check_tuple(T))


# ---------------------------------------------------------------------------
# H_n


@dataclass(frozen=True)
class Alg1State:
    """``graph`` is H_{n-1}; ``triples`` are the n-3 splits that produce H_n."""

    graph: PlaneGraph
    triples: tuple[SplitTriple, ...]
    n: int


def _labels(p: int) -> dict[int, str]:
    return {i: f"v{i + 1}" for i in range(p)}


def iter_algorithm1(N: int) -> Iterator[Alg1State]:
    """Yield the state after each step, starting from H_5 (n = 6) up to H_N."""
    if N < 6:
        raise BadN(f"N must be >= 6, got {N}")
    seed = h5_seed()
    rot = [list(r) for r in seed.rotations]
    S = [SplitTriple(*t) for t in H_START_TRIPLES]
    yield Alg1State(seed, tuple(S), 6)
    for n in range(6, N + 1):
        first_new = len(rot)
        done = []
        for a, b, c in S:
            done.append((a, b, c, split_in_place(rot, a, b, c)))
        # A later split of the same step may consume the fresh triangle
        # (a, b, v); the other new triangle (a, v, c) at the raised vertex
        # borders the same grown face and takes its place.
        S = [
            SplitTriple(a, b, v) if on_triangle(rot, a, b, v) else SplitTriple(a, v, c)
            for a, b, c, v in done
        ]
        S.append(SplitTriple(first_new, 0, S[-1].u1))
        g = build(len(rot), rot, _labels(len(rot)))
        yield Alg1State(g, tuple(S), n + 1)


def algorithm1(N: int) -> list[PlaneGraph]:
    """H_6, ..., H_N, labelled v1, v2, ... in creation order."""
    return [s.graph for s in iter_algorithm1(N)][1:]


# ---------------------------------------------------------------------------
# G(T)

SplitHook = Callable[[PlaneGraph, SplitTriple], None]
StepHook = Callable[[PlaneGraph, int, SplitTriple], None]


def algorithm2(
    T: Sequence[int],
    on_split: SplitHook | None = None,
    on_step: StepHook | None = None,
) -> PlaneGraph:
    """Self-dual polyhedron with degree sequence ``admissible_sequence(T)``.

    Works on the primal graph: a working triple ``(a, b, c)`` spanning a
    triangular face is split ``t - 3`` times per entry ``t``.  Between splits
    of one entry the triple becomes ``(a, c, d)``; after the last split it
    becomes ``(c, a, d)``, handing the pivot role to a degree-3 vertex.

    ``on_split(graph, triple)`` sees the graph before every split and
    ``on_step(graph, t, triple)`` the graph after every entry together with
    the next working triple.  Both cost a copy of the graph per call.
    """
    T = _check_tuple(T)
    rot = [list(r) for r in tetrahedron().rotations]
    a, b, c = 0, 1, 2
    for t in T:
        k = t - 3
        for j in range(k):
            if on_split is not None:
                on_split(_trusted(rot), SplitTriple(a, b, c))
            d = split_in_place(rot, a, b, c)
            if j < k - 1:
                b, c = c, d
            else:
                a, b, c = c, a, d
        if on_step is not None:
            on_step(_trusted(rot), t, SplitTriple(a, b, c))
    return build(len(rot), rot)


def self_dual_family(n: int) -> PlaneGraph:
    """G_n = G((4, 5, ..., n))."""
    if n < 3:
        raise BadN(f"n must be >= 3, got {n}")
    return algorithm2(range(4, n + 1))


def _locate_position(r: QuadGraph, a: int, b: int, c: int) -> PPosition:
    # Find the dual vertex B and orientation whose roles read (a, b, c).
    g = r.graph
    fod = g.face_set.face_of_dart
    for B in g.rotations[b]:
        for forward in (True, False):
            roles = p_roles(r, b, B, forward)
            if roles.a == a and roles.c == c:
                return PPosition(b, B, fod[(b, B)] if forward else fod[(B, b)])
    raise InvalidPosition(f"no P position carries the primal roles ({a}, {b}, {c})")


def algorithm2_radial(T: Sequence[int]) -> QuadGraph:
    """G(T) built on the radial side by P moves from the cube.

    The primal roles follow the same rewrite rules as :func:`algorithm2`;
    the dual roles and the move position are located in the quadrangulation
    itself.  ``primal`` of the result is isomorphic to ``algorithm2(T)``.
    """
    T = _check_tuple(T)
    r = radial(tetrahedron())
    a, b, c = 0, 1, 2
    for t in T:
        k = t - 3
        for j in range(k):
            d = r.graph.p
            r = p_move(r, _locate_position(r, a, b, c))
            if j < k - 1:
                b, c = c, d
            else:
                a, b, c = c, a, d
    return r


def algorithm2_radial_primal(T: Sequence[int]) -> PlaneGraph:
    return primal(algorithm2_radial(T), 0)


# ---------------------------------------------------------------------------
# direct construction of G_n


def algorithm3_edges(n: int) -> list[tuple[int, int]]:
    """Edge list of G_n from the explicit construction, vertices numbered 1..p."""
    if n < 3:
        raise BadN(f"n must be >= 3, got {n}")
    edges = {frozenset((i, j)) for i in range(1, 5) for j in range(i + 1, 5)}
    a, b, c = 1, 3, 4
    p = 4
    for m in range(4, n + 1):
        edges.discard(frozenset((b, c)))
        new = [p + i for i in range(1, m - 2)]
        for v in new:
            edges.add(frozenset((a, v)))
        for i in range(1, m - 4):
            edges.add(frozenset((p + i, p + i + 2)))
        edges.add(frozenset((p + m - 4, p + m - 3)))
        edges.add(frozenset((b, p + 1)))
        if m >= 5:
            edges.add(frozenset((p + 2, c)))
        a, b, c = p + m - 4, a, p + m - 3
        p += m - 3
    return sorted(tuple(sorted(e)) for e in edges)


def algorithm3_oracle(n: int) -> PlaneGraph:
    """G_n from the explicit edge list, embedded by a generic planarity test."""
    edges = algorithm3_edges(n)
    G = nx.Graph(edges)
    planar, emb = nx.check_planarity(G)
    if not planar:
        raise AssertionError(f"edge-list construction for n={n} is not planar")
    p = G.number_of_nodes()
    rot = [list(reversed(list(emb.neighbors_cw_order(v + 1)))) for v in range(p)]
    rot = [[w - 1 for w in r] for r in rot]
    return build(p, rot, _labels(p))


# ---------------------------------------------------------------------------
# order sensitivity of G(T)


def permutation_witness(max_k: int = 4, max_t: int = 7) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """First pair of orderings of one multiset giving non-isomorphic G(T).

    Multisets are visited by size, then lexicographically; orderings of each
    in lexicographic order.  Returns ``None`` when every ordering agrees.
    """
    from itertools import combinations_with_replacement, permutations

    from selfdual.embedding import canonical_code

    for k in range(2, max_k + 1):
        for base in combinations_with_replacement(range(4, max_t + 1), k):
            orders = sorted(set(permutations(base)))
            first = canonical_code(algorithm2(orders[0]))
            for other in orders[1:]:
                if canonical_code(algorithm2(other)) != first:
                    return orders[0], other
    return None
