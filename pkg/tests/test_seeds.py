import pytest

from conftest import cube
from selfdual.algorithms import minimal_order
from selfdual.embedding import degree_sequence, dual, face_vector, faces, is_3connected, is_isomorphic
from selfdual.errors import BadArity, TooSmall
from selfdual.radial import primal, radial
from selfdual.seeds import h5_seed, pseudo_double_wheel, seed_by_name, tetrahedron, wheel
from selfdual.splitting import on_triangle
from selfdual.verification import is_self_dual, satisfies_Sn


def test_tetrahedron():
    g = tetrahedron()
    assert degree_sequence(g) == (3, 3, 3, 3)
    assert is_isomorphic(dual(g), g)
    assert satisfies_Sn(g, 3) and g.p == minimal_order(3) == 4


def test_wheels():
    assert degree_sequence(wheel(5)) == (4, 3, 3, 3, 3)
    assert face_vector(wheel(5)) == (4, 3, 3, 3, 3)
    assert is_isomorphic(wheel(4), tetrahedron())
    assert degree_sequence(wheel(7)) == (6, 3, 3, 3, 3, 3, 3)
    with pytest.raises(TooSmall):
        wheel(3)


def test_pseudo_double_wheels():
    assert is_isomorphic(pseudo_double_wheel(8).graph, cube())
    assert is_isomorphic(pseudo_double_wheel(10).graph, radial(wheel(5)).graph)
    for bad in (7, 6, 11):
        with pytest.raises(BadArity):
            pseudo_double_wheel(bad)


def test_pdw12_dual_is_pentagonal_antiprism():
    import networkx as nx

    from conftest import embed

    # antiprism: two 5-cycles 0..4 and 5..9 joined zigzag
    edges = [(i, (i + 1) % 5) for i in range(5)] + [(5 + i, 5 + (i + 1) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)] + [(i, 5 + (i + 1) % 5) for i in range(5)]
    antiprism = embed(edges)
    assert nx.is_connected(nx.Graph(edges))
    assert is_isomorphic(dual(pseudo_double_wheel(12).graph), antiprism)


def test_radial_of_wheels_are_pdw():
    for p in range(4, 13):
        assert is_isomorphic(radial(wheel(p)).graph, pseudo_double_wheel(2 * p).graph)


def test_h5_faces_and_properties():
    g = h5_seed()
    assert (g.p, g.q) == (7, 12)
    assert degree_sequence(g) == face_vector(g) == (5, 4, 3, 3, 3, 3, 3)
    assert g.p == minimal_order(5)
    named = {frozenset(g.label(v) for v in w) for w in faces(g).faces}
    expected = [
        ("v1", "v2", "v4"), ("v1", "v4", "v6"), ("v1", "v6", "v5"), ("v1", "v5", "v7"),
        ("v3", "v5", "v7"), ("v1", "v7", "v3", "v2"), ("v2", "v4", "v6", "v5", "v3"),
    ]
    assert named == {frozenset(f) for f in expected}
    assert is_3connected(g) and satisfies_Sn(g, 5) and is_self_dual(g)


def test_h5_textual_constraints():
    g = h5_seed()
    v = g.vertex_by_label
    assert g.degree(v("v1")) == 5 and g.degree(v("v5")) == 4
    # pentagon and quadrilateral share edge v2v3
    by_len = {len(w): set(w) for w in faces(g).faces if len(w) > 3}
    assert {v("v2"), v("v3")} <= by_len[4] & by_len[5]
    for t in (("v1", "v4", "v6"), ("v5", "v1", "v7"), ("v6", "v1", "v5")):
        assert on_triangle(g.rotations, *map(v, t))


def test_h5_round_trips_through_radial():
    g = h5_seed()
    assert is_isomorphic(primal(radial(g), 0), g)


def test_seed_by_name():
    assert is_isomorphic(seed_by_name("wheel:6"), wheel(6))
    assert seed_by_name("h5").labels[0] == "v1"
    assert seed_by_name("pdw:10").graph.p == 10
    with pytest.raises(ValueError):
        seed_by_name("dodecahedron")
