import pytest

from conftest import cube, k24
from selfdual.algorithms import algorithm1, self_dual_family
from selfdual.embedding import bipartition, build, dual, is_isomorphic, is_quadrangulation, separating_4cycles
from selfdual.errors import NotQuadrangulation, NotTwoConnected
from selfdual.radial import as_quad, is_radial_of_polyhedron, primal, radial
from selfdual.seeds import h5_seed, pseudo_double_wheel, tetrahedron, wheel
from selfdual.verification import is_self_dual


def test_radial_examples():
    assert is_isomorphic(radial(tetrahedron()).graph, cube())
    assert is_isomorphic(radial(wheel(5)).graph, pseudo_double_wheel(10).graph)


def test_radial_sizes_and_parts(corpus):
    for g in corpus.values():
        r = radial(g)
        assert is_quadrangulation(r.graph)
        assert sorted(map(len, bipartition(r.graph))) == sorted([g.p, len(g.face_set)])
        assert r.graph.q == 2 * g.q
        if is_self_dual(g):
            assert r.graph.p == 2 * g.p


def test_radial_rejects_cut_vertex():
    # two triangles sharing vertex 0
    bowtie = build(5, [[1, 2, 3, 4], [2, 0], [0, 1], [4, 0], [0, 3]])
    with pytest.raises(NotTwoConnected):
        radial(bowtie)


def test_primal_examples():
    c = as_quad(cube())
    assert is_isomorphic(primal(c, 0), tetrahedron())
    assert is_isomorphic(primal(c, 1), tetrahedron())
    for g in (tetrahedron(), wheel(6), h5_seed()):
        assert is_isomorphic(primal(radial(g), 0), g)
    pdw = pseudo_double_wheel(12)
    assert is_isomorphic(primal(pdw, 0), dual(primal(pdw, 1)))


def test_primal_round_trip_and_labels():
    g = h5_seed()
    back = primal(radial(g), 0)
    assert back.rotations == g.rotations
    assert back.labels == g.labels


def test_primal_of_other_part_is_dual(corpus):
    for g in corpus.values():
        r = radial(g)
        assert is_isomorphic(primal(r, 0), g)
        assert is_isomorphic(primal(r, 1), dual(g))


def test_primal_rejects_non_quadrangulation():
    with pytest.raises(NotQuadrangulation):
        primal(tetrahedron())


def test_is_radial_of_polyhedron():
    assert is_radial_of_polyhedron(as_quad(cube()))
    assert not is_radial_of_polyhedron(k24())
    h6 = algorithm1(6)[0]
    assert is_radial_of_polyhedron(radial(h6))


def test_self_dual_radials_have_no_separating_4cycles():
    for n in range(3, 12):
        r = radial(self_dual_family(n))
        assert separating_4cycles(r.graph) == []
        assert is_isomorphic(primal(r, 0), primal(r, 1))
