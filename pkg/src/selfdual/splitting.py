"""Local moves: edge splitting on plane graphs and the P move on quadrangulations.

Edge splitting at an ordered triple ``(u1, u2, u3)`` that runs consecutively
along a face ``F`` deletes ``u2u3`` and adds a vertex ``u4`` joined to all
three.  ``F`` splits into the triangle ``u1 u2 u4`` and a face of the old
length, while the face across ``u2u3`` grows by one.

The P move is the same operation seen on the radial graph: it performs an
edge split on the primal and on the dual side at once.  With ``a, b, c``
the primal roles and ``A, B, C`` the dual ones (``B`` the face through the
primal triple, ``b`` the vertex through the dual triple) it deletes ``b-B``
and adds ``d`` (primal) and ``D`` (dual) with edges ``d-B, d-A, d-D, a-D,
b-D``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple

from selfdual.embedding import (
    PlaneGraph,
    _normalize_cycle,
    _trusted,
    face_multiset,
    is_isomorphic,
)
from selfdual.errors import AcrossFaceContainsU1, InvalidPosition, InvalidTriple
from selfdual.radial import QuadGraph, radial


class SplitTriple(NamedTuple):
    u1: int
    u2: int
    u3: int


@dataclass(frozen=True)
class PPosition:
    """Where to apply P: the edge ``b-B`` and the face index of quad-1.

    Quad-1 is one of the two quadrangles on ``b-B``; its remaining primal
    and dual vertices play ``a`` and ``C``, those of the other quadrangle
    play ``c`` and ``A``.
    """

    b: int
    B: int
    quad1: int


@dataclass(frozen=True)
class PRoles:
    a: int
    b: int
    c: int
    A: int
    B: int
    C: int
    forward: bool


def _split_direction(rot, u1: int, u2: int, u3: int) -> bool:
    """True if ``u1 -> u2 -> u3`` follows a face walk, False if it runs backwards."""
    if len({u1, u2, u3}) != 3:
        raise InvalidTriple(f"triple ({u1}, {u2}, {u3}) repeats a vertex")
    r2 = rot[u2]
    try:
        i = r2.index(u1)
    except ValueError:
        raise InvalidTriple(f"edge {u1}-{u2} is missing") from None
    d = len(r2)
    if r2[(i + 1) % d] == u3:
        return True
    if r2[(i - 1) % d] == u3:
        return False
    if u3 in r2:
        raise InvalidTriple(f"({u1}, {u2}, {u3}) is not consecutive on a face")
    raise InvalidTriple(f"edge {u2}-{u3} is missing")


def on_triangle(rot, u1: int, u2: int, u3: int) -> bool:
    """Is ``(u1, u2, u3)`` a valid split triple lying on a triangular face?"""
    try:
        forward = _split_direction(rot, u1, u2, u3)
    except InvalidTriple:
        return False
    r3 = rot[u3]
    i = r3.index(u2)
    nxt = r3[(i + 1) % len(r3)] if forward else r3[(i - 1) % len(r3)]
    return nxt == u1


def split_in_place(rot: list[list[int]], u1: int, u2: int, u3: int) -> int:
    """Apply an edge split to mutable rotation lists; return the new vertex id.

    Runs in time proportional to the degrees involved.  No face-level
    validation beyond the triple check is done.
    """
    forward = _split_direction(rot, u1, u2, u3)
    u4 = len(rot)
    r2, r3, r1 = rot[u2], rot[u3], rot[u1]
    r2[r2.index(u3)] = u4
    r3[r3.index(u2)] = u4
    j = r1.index(u2)
    if forward:
        r1.insert(j, u4)
        rot.append([u2, u1, u3])
    else:
        r1.insert(j + 1, u4)
        rot.append([u3, u1, u2])
    return u4


def edge_split(g: PlaneGraph, t: SplitTriple | tuple[int, int, int]) -> tuple[PlaneGraph, int]:
    """Split edge ``u2u3`` towards ``u1``; return the new graph and ``u4``.

    The face multiset of the result is checked against the expected rewrite
    (``F`` and the face across ``u2u3`` replaced by the triangle, ``F'`` and
    the grown face) before returning.

    Raises:
        InvalidTriple: missing edges or the triple is not consecutive on a face.
        AcrossFaceContainsU1: the face across ``u2u3`` already contains ``u1``.
    """
    u1, u2, u3 = t
    for v in t:
        if not 0 <= v < g.p:
            raise InvalidTriple(f"vertex {v} not in 0..{g.p - 1}")
    forward = _split_direction(g.rotations, u1, u2, u3)
    fod = g.face_set.face_of_dart
    walks = g.face_set.faces
    f_id = fod[(u1, u2)] if forward else fod[(u2, u1)]
    x_id = fod[(u3, u2)] if forward else fod[(u2, u3)]
    if f_id == x_id or u1 in walks[x_id]:
        raise AcrossFaceContainsU1(f"face across {u2}-{u3} contains {u1}")

    rot = [list(r) for r in g.rotations]
    u4 = split_in_place(rot, u1, u2, u3)
    labels = None
    if g.labels:
        labels = dict(g.labels)
        labels[u4] = f"v{u4 + 1}"
    out = _trusted(rot, labels)

    # face-multiset law
    fw, xw = list(walks[f_id]), list(walks[x_id])
    f_new = [u4 if v == u2 else v for v in fw]
    if forward:
        tri = (u1, u2, u4)
        k = xw.index(u3)  # X contains the dart u3 -> u2
    else:
        tri = (u4, u2, u1)
        k = xw.index(u2)  # X contains the dart u2 -> u3
    x_new = xw[: k + 1] + [u4] + xw[k + 1 :]
    expected = face_multiset(g)
    expected -= Counter([_normalize_cycle(fw), _normalize_cycle(xw)])
    expected += Counter([_normalize_cycle(tri), _normalize_cycle(f_new), _normalize_cycle(x_new)])
    if face_multiset(out) != expected:
        raise AssertionError(f"edge split {tuple(t)} broke the face-multiset law")
    return out, u4


def p_roles(r: QuadGraph, b: int, B: int, forward: bool) -> PRoles:
    """Read the role vertices of a P position.

    ``forward`` selects the quadrangle containing the dart ``b -> B`` as
    quad-1; otherwise the one containing ``B -> b``.
    """
    g = r.graph
    if b not in r.primal_part or B not in r.dual_part or not g.has_edge(b, B):
        raise InvalidPosition(f"{b}-{B} is not a primal-dual edge")
    x1 = g.succ(B, b)
    y1 = g.succ(x1, B)
    y2 = g.succ(b, B)
    x2 = g.succ(y2, b)
    if g.succ(y1, x1) != b or g.succ(x2, y2) != B:
        raise InvalidPosition("faces around the edge are not quadrangles")
    if (x1, y1) == (x2, y2):
        raise InvalidPosition("both sides of the edge are the same face")
    if forward:
        return PRoles(a=x1, b=b, c=x2, A=y2, B=B, C=y1, forward=True)
    return PRoles(a=x2, b=b, c=x1, A=y1, B=B, C=y2, forward=False)


def _p_move_rotations(rotations, roles: PRoles) -> list:
    a, b, A, B = roles.a, roles.b, roles.A, roles.B
    rot = list(rotations)
    d = len(rot)
    D = d + 1
    rb = list(rot[b])
    rb[rb.index(B)] = D
    rB = list(rot[B])
    rB[rB.index(b)] = d
    ra = list(rot[a])
    rA = list(rot[A])
    if roles.forward:
        ra.insert(ra.index(B) + 1, D)
        rA.insert(rA.index(b) + 1, d)
        rot.append((D, B, A))
        rot.append((b, a, d))
    else:
        ra.insert(ra.index(B), D)
        rA.insert(rA.index(b), d)
        rot.append((A, B, D))
        rot.append((d, a, b))
    rot[a], rot[b], rot[A], rot[B] = tuple(ra), tuple(rb), tuple(rA), tuple(rB)
    return rot


def p_move(r: QuadGraph, pos: PPosition) -> QuadGraph:
    """Apply the P move; new vertices get ids ``p`` (primal ``d``) and ``p+1`` (dual ``D``).

    Raises:
        InvalidPosition: ``b-B`` is not a primal-dual edge or ``quad1`` is not
            one of its two quadrangles.
    """
    g = r.graph
    if not (0 <= pos.b < g.p and 0 <= pos.B < g.p) or not g.has_edge(pos.b, pos.B):
        raise InvalidPosition(f"{pos.b}-{pos.B} is not an edge")
    fod = g.face_set.face_of_dart
    if pos.quad1 == fod[(pos.b, pos.B)]:
        forward = True
    elif pos.quad1 == fod[(pos.B, pos.b)]:
        forward = False
    else:
        raise InvalidPosition(f"face {pos.quad1} does not contain edge {pos.b}-{pos.B}")
    roles = p_roles(r, pos.b, pos.B, forward)
    rot = _p_move_rotations(g.rotations, roles)
    d = g.p
    labels = dict(g.labels) if g.labels else None
    return QuadGraph(_trusted(rot, labels), r.primal_part | {d}, r.dual_part | {d + 1})


def position_for_triple(g: PlaneGraph, rg: QuadGraph, t: SplitTriple | tuple[int, int, int]) -> PPosition:
    """The P position in ``rg = radial(g)`` matching an edge split of ``g`` at ``t``.

    ``b = u2``, ``B`` is the face through the triple, and quad-1 is the
    radial quadrangle of the edge ``u1u2``.
    """
    u1, u2, u3 = t
    forward = _split_direction(g.rotations, u1, u2, u3)
    fod = g.face_set.face_of_dart
    face = fod[(u1, u2)] if forward else fod[(u2, u1)]
    B = g.p + face
    rfaces = rg.graph.face_set.faces
    for i, walk in enumerate(rfaces):
        if u1 in walk and u2 in walk and B in walk:
            return PPosition(u2, B, i)
    raise InvalidTriple(f"no radial quadrangle for edge {u1}-{u2} at face {face}")


def p_equiv_check(g: PlaneGraph, t: SplitTriple | tuple[int, int, int]) -> bool:
    """Does splitting in ``g`` agree with P on its radial graph?"""
    split, _ = edge_split(g, t)
    rg = radial(g)
    moved = p_move(rg, position_for_triple(g, rg, t))
    return is_isomorphic(radial(split).graph, moved.graph)
