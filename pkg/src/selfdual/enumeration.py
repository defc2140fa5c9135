"""Breadth-first closure of the cube under the P move.

Level ``q`` holds the quadrangulations with ``2q`` edges reachable from the
cube, one representative per canonical code.  A member is counted as the
radial graph of a self-dual polyhedron when it has no separating 4-cycles,
is 3-connected, and its two colour classes span isomorphic graphs.

Self-duality of a member is read off its codes for free: the least code over
darts leaving the primal class equals the least code over darts leaving the
dual class exactly when some automorphism of the quadrangulation swaps the
classes, i.e. when the primal graph is isomorphic to its dual.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterator

from selfdual.embedding import PlaneGraph, _min_code, _trusted, encode_code, is_isomorphic
from selfdual.radial import QuadGraph, is_radial_of_polyhedron, primal, radial
from selfdual.seeds import tetrahedron
from selfdual.splitting import _p_move_rotations, p_roles

log = logging.getLogger(__name__)

# Known totals of self-dual polyhedra by edge count (reference data only).
REFERENCE_TOTALS = {6: 1, 8: 1, 10: 2, 12: 6, 14: 16, 16: 50, 18: 165, 20: 554, 22: 1908}

# Known counts of radials of self-duals inside the closure, for regression.
REFERENCE_CLOSURE_COUNTS = {6: 1, 8: 1, 10: 2, 12: 5, 14: 15, 16: 40, 18: 140, 20: 417, 22: 1496}


@dataclass
class Member:
    quad: QuadGraph
    code: bytes
    classes_swap: bool  # primal and dual classes give the same least code


@dataclass
class ClosureLevel:
    size_g: int
    members: dict[bytes, Member] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class CountsRow:
    q: int
    closure_selfdual: int
    reference_total: int | None
    closure_size: int


def _member(quad: QuadGraph) -> Member:
    g = quad.graph
    ca = _min_code(g, sorted(quad.primal_part))
    cb = _min_code(g, sorted(quad.dual_part))
    return Member(quad, encode_code(min(ca, cb)), ca == cb)


def _children(m: Member) -> Iterator[Member]:
    quad = m.quad
    g = quad.graph
    d = g.p
    pp = quad.primal_part | {d}
    dp = quad.dual_part | {d + 1}
    for b in sorted(quad.primal_part):
        for B in g.rotations[b]:
            for forward in (True, False):
                roles = p_roles(quad, b, B, forward)
                child = _trusted(_p_move_rotations(g.rotations, roles))
                yield _member(QuadGraph(child, pp, dp))


def cube_member() -> Member:
    return _member(radial(tetrahedron()))


def iter_closure(max_q: int) -> Iterator[ClosureLevel]:
    """Yield closure levels q = 6, 8, ... up to ``max_q``.

    Only the previous level is held in memory while the next is built.
    Parents are visited in code order and positions in a fixed order, so the
    representative kept for each code does not depend on dict ordering.
    """
    level = ClosureLevel(6)
    cube = cube_member()
    level.members[cube.code] = cube
    q = 6
    while q <= max_q:
        yield level
        if q + 2 > max_q:
            return
        nxt = ClosureLevel(q + 2)
        for code in sorted(level.members):
            for child in _children(level.members[code]):
                if child.code not in nxt.members:
                    nxt.members[child.code] = child
        log.info("level q=%d: %d members", q + 2, len(nxt))
        level = nxt
        q += 2


def closure(max_q: int) -> list[ClosureLevel]:
    """All closure levels up to ``max_q`` (kept in memory)."""
    return list(iter_closure(max_q))


def is_selfdual_radial(m: Member) -> bool:
    """Radial graph of a self-dual polyhedron?"""
    if not m.classes_swap:
        return False
    if not is_radial_of_polyhedron(m.quad):
        return False
    # the code shortcut is cross-checked on the primal graphs themselves
    return is_isomorphic(primal(m.quad, 0), primal(m.quad, 1))


def count_selfdual(level: ClosureLevel) -> int:
    return sum(1 for m in level.members.values() if is_selfdual_radial(m))


def table1(max_q: int) -> list[CountsRow]:
    """Counts of self-dual radials per closure level, next to the known totals."""
    if max_q < 6:
        raise ValueError(f"max_q must be >= 6, got {max_q}")
    rows = []
    for level in iter_closure(max_q):
        rows.append(CountsRow(level.size_g, count_selfdual(level), REFERENCE_TOTALS.get(level.size_g), len(level)))
    return rows


def primal_graph(m: Member) -> PlaneGraph:
    return primal(m.quad, 0)
