"""Radial (vertex-face) graphs and their inverse on quadrangulations."""

from __future__ import annotations

from dataclasses import dataclass

from selfdual.embedding import (
    PlaneGraph,
    _trusted,
    bipartition,
    build,
    is_2connected,
    is_3connected,
    is_quadrangulation,
    separating_4cycles,
)
from selfdual.errors import NotQuadrangulation, NotTwoConnected


@dataclass(frozen=True)
class QuadGraph:
    """A quadrangulation of the sphere with its two colour classes tagged.

    ``primal_part`` holds the vertices standing for vertices of the
    underlying graph, ``dual_part`` those standing for its faces.
    """

    graph: PlaneGraph
    primal_part: frozenset[int]
    dual_part: frozenset[int]

    def part_of(self, v: int) -> int:
        return 0 if v in self.primal_part else 1


def as_quad(g: PlaneGraph, primal_vertex: int = 0) -> QuadGraph:
    """Tag a plane graph as a quadrangulation.

    The primal part is the colour class containing ``primal_vertex``.

    Raises:
        NotQuadrangulation: some face is not a 4-cycle.
        NotBipartite: propagated from :func:`bipartition`.
    """
    if not is_quadrangulation(g):
        raise NotQuadrangulation("every face must have length 4")
    a, b = bipartition(g)
    if primal_vertex in b:
        a, b = b, a
    return QuadGraph(g, a, b)


def radial(g: PlaneGraph) -> QuadGraph:
    """Vertex-face incidence graph of a 2-connected plane graph.

    Vertex ids ``0..p-1`` are the vertices of ``g``; ids ``p + i`` stand for
    face ``i`` of ``g``.  At an original vertex the incident faces appear in
    rotation order; at a face vertex its boundary vertices appear in face-walk
    order read backwards, which keeps the embedding counterclockwise.
    """
    if not is_2connected(g):
        raise NotTwoConnected("radial graph needs a 2-connected input")
    fs = g.face_set
    p = g.p
    fod = fs.face_of_dart
    rot: list[tuple[int, ...]] = []
    for v, r in enumerate(g.rotations):
        rot.append(tuple(p + fod[(v, w)] for w in r))
    for walk in fs.faces:
        rot.append(tuple(reversed(walk)))
    labels = dict(g.labels) if g.labels else None
    return QuadGraph(_trusted(rot, labels), frozenset(range(p)), frozenset(range(p, p + len(fs))))


def primal(r: QuadGraph | PlaneGraph, part: int = 0) -> PlaneGraph:
    """Recover a plane graph from one colour class of a quadrangulation.

    ``part`` 0 selects the class containing vertex 0 of ``r``, 1 the other.
    Each quadrangle contributes the edge joining its two vertices of the
    chosen class; vertices are renumbered in increasing id order and keep
    their labels.

    Raises:
        NotQuadrangulation: ``r`` has a face that is not a 4-cycle.
        DuplicateEdge: two quadrangles yield the same edge (the class does not
            span a simple graph).
    """
    g = r.graph if isinstance(r, QuadGraph) else r
    if not is_quadrangulation(g):
        raise NotQuadrangulation("every face must have length 4")
    first, second = bipartition(g)
    chosen = sorted(first if part == 0 else second)
    new_id = {v: i for i, v in enumerate(chosen)}
    fod = g.face_set.face_of_dart
    walks = g.face_set.faces
    rot = []
    for v in chosen:
        out = []
        for w in g.rotations[v]:
            walk = walks[fod[(v, w)]]
            j = walk.index(v)
            out.append(new_id[walk[(j + 2) % 4]])
        # start one step later so that primal(radial(g)) reproduces g's lists
        rot.append(out[1:] + out[:1])
    labels = None
    if g.labels:
        labels = {new_id[v]: s for v, s in g.labels.items() if v in new_id}
    return build(len(chosen), rot, labels)


def is_radial_of_polyhedron(r: QuadGraph | PlaneGraph) -> bool:
    """3-connected and free of separating 4-cycles."""
    g = r.graph if isinstance(r, QuadGraph) else r
    if g.p < 4 or not is_quadrangulation(g):
        return False
    return is_3connected(g) and not separating_4cycles(g)
