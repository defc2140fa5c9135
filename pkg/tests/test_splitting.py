import random
from collections import Counter

import pytest

from conftest import cube, random_tuples
from selfdual.algorithms import algorithm2
from selfdual.embedding import (
    bipartition,
    degree_sequence,
    face_vector,
    faces,
    is_3connected,
    is_isomorphic,
    is_quadrangulation,
)
from selfdual.errors import InvalidPosition, InvalidTriple
from selfdual.radial import as_quad, primal, radial
from selfdual.seeds import h5_seed, pseudo_double_wheel, tetrahedron, wheel
from selfdual.splitting import PPosition, edge_split, p_equiv_check, p_move, p_roles


def all_triples(g):
    """Every (u1, u2, u3) consecutive on some face, in both directions."""
    out = set()
    for w in faces(g).faces:
        n = len(w)
        for i in range(n):
            a, b, c = w[i], w[(i + 1) % n], w[(i + 2) % n]
            out.add((a, b, c))
            out.add((c, b, a))
    return sorted(out)


def test_tetrahedron_split_gives_square_pyramid():
    # vertices 1..4 of the text are ids 0..3 here
    g, u4 = edge_split(tetrahedron(), (0, 1, 2))
    assert u4 == 4
    assert degree_sequence(g) == (4, 3, 3, 3, 3)
    quads = [set(w) for w in faces(g).faces if len(w) == 4]
    assert quads == [{1, 3, 2, 4}]
    assert is_isomorphic(g, wheel(5))


def test_split_missing_edge():
    # in the square pyramid (hub 0) rim vertices 1 and 3 are opposite
    with pytest.raises(InvalidTriple):
        edge_split(wheel(5), (2, 1, 3))
    with pytest.raises(InvalidTriple):
        edge_split(wheel(5), (1, 1, 2))


def test_split_not_consecutive_on_face():
    # 1-0 and 0-3 are edges of the pyramid but not on a common face
    with pytest.raises(InvalidTriple):
        edge_split(wheel(5), (1, 0, 3))


def test_split_bookkeeping_and_connectivity():
    for g in (tetrahedron(), wheel(6), h5_seed(), algorithm2((5, 4))):
        for t in all_triples(g):
            h, u4 = edge_split(g, t)
            assert (h.p - g.p, h.q - g.q, len(faces(h)) - len(faces(g))) == (1, 2, 1)
            assert h.degree(t[0]) == g.degree(t[0]) + 1
            assert h.degree(u4) == 3
            assert all(h.degree(v) == g.degree(v) for v in range(g.p) if v != t[0])
            assert is_3connected(h)
            # one new triangle, and the face across u2u3 (length x) grows by one
            before, after = Counter(face_vector(g)), Counter(face_vector(h))
            assert any(after + Counter([x]) == before + Counter([3, x + 1]) for x in before)


def test_split_labels_new_vertex():
    h, u4 = edge_split(h5_seed(), (5, 0, 4))
    assert h.label(u4) == "v8"


def test_split_does_not_mutate_input():
    g = wheel(6)
    before = g.rotations
    edge_split(g, (0, 1, 2))
    assert g.rotations == before


# --- P move -------------------------------------------------------------


def positions(r):
    g = r.graph
    fod = g.face_set.face_of_dart
    for b in sorted(r.primal_part):
        for B in g.rotations[b]:
            yield PPosition(b, B, fod[(b, B)])
            yield PPosition(b, B, fod[(B, b)])


def test_p_move_on_cube():
    r = as_quad(cube())
    for pos in positions(r):
        out = p_move(r, pos)
        assert is_isomorphic(out.graph, pseudo_double_wheel(10).graph)
        assert is_isomorphic(primal(out, 0), wheel(5))


def test_p_move_postconditions():
    for r in (radial(h5_seed()), radial(algorithm2((6, 4))), pseudo_double_wheel(12)):
        g = r.graph
        for pos in positions(r):
            out = p_move(r, pos)
            h = out.graph
            assert is_quadrangulation(h)
            assert set(bipartition(h)) == {out.primal_part, out.dual_part}
            assert (h.p - g.p, h.q - g.q) == (2, 4)
            forward = g.face_set.face_of_dart[(pos.b, pos.B)] == pos.quad1
            roles = p_roles(r, pos.b, pos.B, forward)
            d, D = g.p, g.p + 1
            assert h.degree(d) == h.degree(D) == 3
            for v in range(g.p):
                grow = 1 if v in (roles.a, roles.A) else 0
                assert h.degree(v) == g.degree(v) + grow
            assert not h.has_edge(roles.b, roles.B)
            for u, v in ((d, roles.B), (d, roles.A), (d, D), (roles.a, D), (roles.b, D)):
                assert h.has_edge(u, v)
            local = {frozenset(w) for w in h.face_set.faces}
            a, b, c, A, B, C = roles.a, roles.b, roles.c, roles.A, roles.B, roles.C
            for quad in ((a, C, b, D), (a, B, d, D), (b, A, d, D), (d, B, c, A)):
                assert frozenset(quad) in local


def test_p_move_bad_positions():
    r = as_quad(cube())
    b = min(r.primal_part)
    with pytest.raises(InvalidPosition):
        p_move(r, PPosition(b, b, 0))
    B = r.graph.rotations[b][0]
    far = next(i for i, w in enumerate(r.graph.face_set.faces) if b not in w)
    with pytest.raises(InvalidPosition):
        p_move(r, PPosition(b, B, far))


# --- equivalence --------------------------------------------------------


def test_p_equiv_examples():
    assert p_equiv_check(tetrahedron(), (0, 1, 2))
    assert p_equiv_check(h5_seed(), (0, 3, 5))


def test_p_equiv_every_triple_small():
    for g in (tetrahedron(), wheel(5), h5_seed()):
        for t in all_triples(g):
            assert p_equiv_check(g, t)


def test_p_equiv_random_pairs():
    rng = random.Random(3)
    for T in random_tuples(20, seed=11, max_k=4, hi=7):
        g = algorithm2(T)
        t = rng.choice(all_triples(g))
        assert p_equiv_check(g, t)
