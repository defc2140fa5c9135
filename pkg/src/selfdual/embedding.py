"""Plane graphs stored as rotation systems.

A :class:`PlaneGraph` keeps, for every vertex, the cyclic order of its
neighbours in counterclockwise direction.  Faces are traced with the rule
``next(u -> v) = v -> succ_v(u)``, where ``succ_v`` is the next neighbour
after ``u`` in the rotation of ``v``; this walks every face clockwise, with
the face lying to the right of each dart.

Everything in here is pure: graphs are immutable once built, and all derived
data (faces, index maps, connectivity flags) is cached on the instance.
"""

from __future__ import annotations

import itertools
import struct
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from selfdual.errors import (
    DuplicateEdge,
    MultiEdgeInDual,
    NonSymmetricAdjacency,
    NotBipartite,
    NotConnected,
    NotGenusZero,
    SelfLoop,
    TooSmall,
    VertexOutOfRange,
)

CanonicalCode = bytes
Dart = tuple[int, int]


@dataclass(frozen=True)
class FaceSet:
    """Face walks of a plane graph.

    ``faces[i]`` lists the vertices of face ``i`` in traversal order, so the
    darts of the face are ``faces[i][j] -> faces[i][j + 1]`` (cyclically).
    """

    faces: tuple[tuple[int, ...], ...]
    face_of_dart: Mapping[Dart, int]

    def __len__(self) -> int:
        return len(self.faces)

    def lengths(self) -> list[int]:
        return [len(f) for f in self.faces]


@dataclass(frozen=True)
class PlaneGraph:
    """A connected simple graph embedded in the sphere.

    Use :func:`build` to construct a validated instance.  ``labels`` maps
    vertex ids to display names (``"v1"``, ...) and does not take part in
    equality.
    """

    rotations: tuple[tuple[int, ...], ...]
    labels: Mapping[int, str] | None = field(default=None, compare=False)

    @property
    def p(self) -> int:
        return len(self.rotations)

    @cached_property
    def q(self) -> int:
        return sum(len(r) for r in self.rotations) // 2

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotations[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.index[u]

    def label(self, v: int) -> str:
        if self.labels and v in self.labels:
            return self.labels[v]
        return str(v)

    def vertex_by_label(self, name: str) -> int:
        """Resolve a label (or a plain integer string) to a vertex id."""
        if self.labels:
            for v, lab in self.labels.items():
                if lab == name:
                    return v
        try:
            v = int(name)
        except ValueError:
            raise VertexOutOfRange(f"unknown vertex {name!r}") from None
        if not 0 <= v < self.p:
            raise VertexOutOfRange(f"vertex {v} not in 0..{self.p - 1}")
        return v

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u, rot in enumerate(self.rotations) for v in rot if u < v]

    def darts(self) -> Iterable[Dart]:
        for u, rot in enumerate(self.rotations):
            for v in rot:
                yield (u, v)

    @cached_property
    def index(self) -> tuple[dict[int, int], ...]:
        """Per vertex, neighbour -> position in the rotation."""
        return tuple({w: i for i, w in enumerate(rot)} for rot in self.rotations)

    def succ(self, v: int, u: int) -> int:
        """Neighbour of ``v`` following ``u`` counterclockwise."""
        rot = self.rotations[v]
        return rot[(self.index[v][u] + 1) % len(rot)]

    def pred(self, v: int, u: int) -> int:
        rot = self.rotations[v]
        return rot[(self.index[v][u] - 1) % len(rot)]

    @cached_property
    def face_set(self) -> FaceSet:
        return _trace_faces(self.rotations, self.index)

    def mirror(self) -> PlaneGraph:
        """The reflected embedding (every rotation reversed)."""
        return PlaneGraph(tuple(tuple(reversed(r)) for r in self.rotations), self.labels)

    def relabel(self, perm: Sequence[int]) -> PlaneGraph:
        """Rename vertex ``v`` to ``perm[v]``."""
        rot: list[tuple[int, ...]] = [()] * self.p
        for v, r in enumerate(self.rotations):
            rot[perm[v]] = tuple(perm[w] for w in r)
        labels = None
        if self.labels:
            labels = {perm[v]: s for v, s in self.labels.items()}
        return PlaneGraph(tuple(rot), labels)

    @cached_property
    def _is_3connected(self) -> bool:
        adj = self.rotations
        if not _connected(adj, skip=-1):
            return False
        return all(not _has_cut_vertex(adj, skip=v) for v in range(self.p))

    @cached_property
    def _is_2connected(self) -> bool:
        return self.p >= 3 and _connected(self.rotations, -1) and not _has_cut_vertex(self.rotations, -1)


# ---------------------------------------------------------------------------
# construction and validation


def build(
    p: int,
    rotations: Sequence[Sequence[int]],
    labels: Mapping[int, str] | None = None,
) -> PlaneGraph:
    """Validate a rotation system and wrap it as a :class:`PlaneGraph`.

    Raises:
        VertexOutOfRange: a neighbour id outside ``0..p-1`` or a wrong count
            of rotation lists.
        SelfLoop, DuplicateEdge, NonSymmetricAdjacency: the graph is not simple.
        NotConnected: more than one component.
        NotGenusZero: ``p - q + f != 2``.
    """
    if p < 1 or len(rotations) != p:
        raise VertexOutOfRange(f"expected {p} rotation lists, got {len(rotations)}")
    rot = tuple(tuple(int(w) for w in r) for r in rotations)
    for v, r in enumerate(rot):
        for w in r:
            if not 0 <= w < p:
                raise VertexOutOfRange(f"vertex {v} lists neighbour {w} outside 0..{p - 1}")
            if w == v:
                raise SelfLoop(f"vertex {v} lists itself")
        if len(set(r)) != len(r):
            raise DuplicateEdge(f"vertex {v} lists a neighbour twice: {list(r)}")
    for v, r in enumerate(rot):
        for w in r:
            if v not in rot[w]:
                raise NonSymmetricAdjacency(f"{v} lists {w} but {w} does not list {v}")
    if not _connected(rot, -1):
        raise NotConnected("graph has more than one component")
    g = PlaneGraph(rot, dict(labels) if labels else None)
    f = len(g.face_set)
    if g.p - g.q + f != 2:
        raise NotGenusZero(f"p - q + f = {g.p} - {g.q} + {f} != 2")
    return g


def from_edges_with_rotation(rotations: Sequence[Sequence[int]], labels=None) -> PlaneGraph:
    """Shorthand for ``build(len(rotations), rotations, labels)``."""
    return build(len(rotations), rotations, labels)


def _trusted(rotations: Sequence[Sequence[int]], labels: Mapping[int, str] | None = None) -> PlaneGraph:
    # Internal constructor for moves whose output is valid by construction.
    return PlaneGraph(tuple(tuple(r) for r in rotations), labels)


def _connected(adj: Sequence[Sequence[int]], skip: int) -> bool:
    n = len(adj)
    start = 0 if skip != 0 else 1
    if start >= n:
        return True
    seen = [False] * n
    seen[start] = True
    if 0 <= skip < n:
        seen[skip] = True
    stack = [start]
    count = 1
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n - (1 if 0 <= skip < n else 0)


def _has_cut_vertex(adj: Sequence[Sequence[int]], skip: int) -> bool:
    """Articulation point test on the graph with vertex ``skip`` removed.

    Iterative Hopcroft-Tarjan lowpoint computation; assumes the remaining
    graph is connected (checked by the caller via :func:`_connected` for
    ``skip == -1``; a disconnected remainder is reported as a cut).
    """
    n = len(adj)
    root = 0 if skip != 0 else 1
    if n - (skip >= 0) <= 2:
        return False
    disc = [-1] * n
    low = [0] * n
    if skip >= 0:
        disc[skip] = -2
    disc[root] = 0
    low[root] = 0
    t = 1
    root_children = 0
    # stack of (vertex, parent, neighbour iterator position)
    stack = [(root, -1, 0)]
    visited = 1
    while stack:
        v, parent, i = stack[-1]
        nbrs = adj[v]
        if i < len(nbrs):
            stack[-1] = (v, parent, i + 1)
            w = nbrs[i]
            if w == skip or w == parent:
                continue
            if disc[w] == -1:
                disc[w] = low[w] = t
                t += 1
                visited += 1
                stack.append((w, v, 0))
                if v == root:
                    root_children += 1
            elif disc[w] < low[v]:
                low[v] = disc[w]
        else:
            stack.pop()
            if parent >= 0:
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if parent != root and low[v] >= disc[parent]:
                    return True
    if visited != n - (skip >= 0):
        return True
    return root_children > 1


def _trace_faces(rotations, index) -> FaceSet:
    faces: list[tuple[int, ...]] = []
    face_of: dict[Dart, int] = {}
    for u, rot in enumerate(rotations):
        for v in rot:
            if (u, v) in face_of:
                continue
            fid = len(faces)
            walk = []
            x, y = u, v
            while (x, y) not in face_of:
                face_of[(x, y)] = fid
                walk.append(x)
                ry = rotations[y]
                x, y = y, ry[(index[y][x] + 1) % len(ry)]
            faces.append(tuple(walk))
    if not faces:
        # a single isolated vertex has one face with an empty boundary
        faces.append(())
    return FaceSet(tuple(faces), face_of)


# ---------------------------------------------------------------------------
# faces, duals, sequences


def faces(g: PlaneGraph) -> FaceSet:
    return g.face_set


def face_count(g: PlaneGraph) -> int:
    return len(g.face_set)


def degree_sequence(g: PlaneGraph) -> tuple[int, ...]:
    return tuple(sorted((len(r) for r in g.rotations), reverse=True))


def face_vector(g: PlaneGraph) -> tuple[int, ...]:
    return tuple(sorted(g.face_set.lengths(), reverse=True))


def dual(g: PlaneGraph) -> PlaneGraph:
    """Geometric dual: one vertex per face, one edge per shared edge.

    The rotation at a dual vertex lists the faces across its boundary edges
    in counterclockwise order, i.e. the face walk read backwards.

    Raises:
        MultiEdgeInDual: two faces share more than one edge, or a face
            borders itself; the input was not 3-connected.
    """
    fs = g.face_set
    fod = fs.face_of_dart
    rot = []
    for fid, walk in enumerate(fs.faces):
        k = len(walk)
        across = [fod[(walk[(j + 1) % k], walk[j])] for j in range(k)]
        if fid in across:
            raise MultiEdgeInDual(f"face {fid} borders itself (bridge in the input)")
        if len(set(across)) != k:
            raise MultiEdgeInDual(f"face {fid} shares more than one edge with a neighbouring face")
        rot.append(tuple(reversed(across)))
    return _trusted(rot)


# ---------------------------------------------------------------------------
# canonical codes


def _vertex_invariants(rotations) -> list[tuple[int, int]]:
    deg = [len(r) for r in rotations]
    return [(deg[v], sum(deg[w] for w in r)) for v, r in enumerate(rotations)]


def _bfs_code(rotations, index, u: int, i: int, step: int, best: list[int] | None) -> list[int] | None:
    """Breadth-first code started at dart ``u -> rotations[u][i]``.

    Vertices are numbered in discovery order; each vertex contributes the
    numbers of its neighbours read from its entry dart in direction ``step``
    followed by a 0 separator.  Returns ``None`` as soon as the code exceeds
    ``best`` lexicographically.
    """
    n = len(rotations)
    number = [0] * n
    number[u] = 1
    order = [u]
    entry = [i]
    nxt = 2
    code: list[int] = []
    pos = 0
    tight = best is not None
    k = 0
    while k < len(order):
        x = order[k]
        r = rotations[x]
        d = len(r)
        e = entry[k]
        for j in range(d):
            y = r[(e + step * j) % d]
            ny = number[y]
            if ny == 0:
                ny = number[y] = nxt
                nxt += 1
                order.append(y)
                entry.append(index[y][x])
            if tight:
                b = best[pos]
                if ny > b:
                    return None
                if ny < b:
                    tight = False
            code.append(ny)
            pos += 1
        if tight:
            if best[pos] > 0:
                tight = False
        code.append(0)
        pos += 1
        k += 1
    return code


def _min_code(g: PlaneGraph, starts: Iterable[int] | None = None) -> list[int]:
    """Lexicographically least (header + BFS code) over darts leaving ``starts``.

    The header of a dart ``u -> v`` is ``(p, q, deg u, nsum u, deg v, nsum v)``
    where ``nsum`` is the sum of neighbour degrees.  Only darts with the
    least header can reach the minimum, so only those are expanded.
    """
    rot = g.rotations
    p, q = g.p, g.q
    if q == 0:
        return [p, q]
    inv = _vertex_invariants(rot)
    tails = range(p) if starts is None else starts
    best_head = None
    cands: list[tuple[int, int]] = []
    for u in tails:
        iu = inv[u]
        for i, v in enumerate(rot[u]):
            h = iu + inv[v]
            if best_head is None or h < best_head:
                best_head = h
                cands = [(u, i)]
            elif h == best_head:
                cands.append((u, i))
    index = g.index
    best: list[int] | None = None
    for u, i in cands:
        for step in (1, -1):
            c = _bfs_code(rot, index, u, i, step, best)
            if c is not None and (best is None or c < best):
                best = c
    return [p, q, *best_head, *best]


def encode_code(values: Sequence[int]) -> CanonicalCode:
    """Pack an integer code into bytes: a width byte, then big-endian values."""
    top = max(values) if values else 0
    if top < 1 << 8:
        width, fmt = 1, "B"
    elif top < 1 << 16:
        width, fmt = 2, "H"
    else:
        width, fmt = 4, "I"
    return bytes([width]) + struct.pack(f">{len(values)}{fmt}", *values)


def canonical_code(g: PlaneGraph) -> CanonicalCode:
    """Relabeling- and reflection-invariant code of an embedded graph."""
    return encode_code(_min_code(g))


def is_isomorphic(g: PlaneGraph, h: PlaneGraph) -> bool:
    """Embedding equivalence up to relabeling and reflection.

    For 3-connected graphs this is ordinary graph isomorphism, since their
    sphere embedding is unique up to reflection.
    """
    if g.p != h.p or g.q != h.q or degree_sequence(g) != degree_sequence(h):
        return False
    return canonical_code(g) == canonical_code(h)


# ---------------------------------------------------------------------------
# structural predicates


def is_2connected(g: PlaneGraph) -> bool:
    return g._is_2connected


def is_3connected(g: PlaneGraph) -> bool:
    """True iff deleting any two vertices leaves the graph connected.

    Every vertex is removed in turn and the remainder is scanned for an
    articulation point, which covers all vertex pairs.
    """
    if g.p < 4:
        raise TooSmall(f"3-connectivity needs p >= 4, got {g.p}")
    return g._is_3connected


def _normalize_cycle(cyc: Sequence[int]) -> tuple[int, ...]:
    # Canonical rotation/reflection of a cycle, so equal edge sets compare equal.
    k = len(cyc)
    i = min(range(k), key=lambda j: cyc[j])
    fwd = tuple(cyc[(i + j) % k] for j in range(k))
    bwd = tuple(cyc[(i - j) % k] for j in range(k))
    return min(fwd, bwd)


def four_cycles(g: PlaneGraph) -> list[tuple[int, ...]]:
    """All 4-cycles, each reported once in normalized form."""
    nbr = [set(r) for r in g.rotations]
    found = set()
    for x, z in itertools.combinations(range(g.p), 2):
        common = nbr[x] & nbr[z]
        if len(common) < 2:
            continue
        for y, w in itertools.combinations(sorted(common), 2):
            found.add(_normalize_cycle((x, y, z, w)))
    return sorted(found)


def separating_4cycles(g: PlaneGraph) -> list[tuple[int, ...]]:
    """4-cycles that do not bound a face."""
    face_cycles = {_normalize_cycle(f) for f in g.face_set.faces if len(f) == 4}
    return [c for c in four_cycles(g) if c not in face_cycles]


def is_quadrangulation(g: PlaneGraph) -> bool:
    return all(len(f) == 4 for f in g.face_set.faces)


def bipartition(g: PlaneGraph) -> tuple[frozenset[int], frozenset[int]]:
    """Two colour classes; the first one contains vertex 0."""
    colour = [-1] * g.p
    colour[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in g.rotations[v]:
            if colour[w] == -1:
                colour[w] = 1 - colour[v]
                queue.append(w)
            elif colour[w] == colour[v]:
                raise NotBipartite(f"edge {v}-{w} joins vertices of the same class")
    return (
        frozenset(v for v in range(g.p) if colour[v] == 0),
        frozenset(v for v in range(g.p) if colour[v] == 1),
    )


def face_multiset(g: PlaneGraph) -> Counter:
    """Faces as a multiset of normalized vertex cycles."""
    return Counter(_normalize_cycle(f) for f in g.face_set.faces)
