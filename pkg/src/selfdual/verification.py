"""Predicates for polyhedrality, self-duality, the S_n property and the
edge-count bounds that lead to the minimal order."""

from __future__ import annotations

from dataclasses import dataclass

from selfdual.algorithms import minimal_order
from selfdual.embedding import PlaneGraph, canonical_code, dual, face_vector, degree_sequence, is_3connected
from selfdual.errors import BadN, HypothesisNotMet, NotPolyhedral


def is_polyhedral(g: PlaneGraph) -> bool:
    """Planar (guaranteed by construction), simple, p >= 4 and 3-connected."""
    return g.p >= 4 and is_3connected(g)


def _require_polyhedral(g: PlaneGraph) -> None:
    if not is_polyhedral(g):
        raise NotPolyhedral("input is not a polyhedral graph")


def degrees_cover(g: PlaneGraph, n: int) -> bool:
    present = set(len(r) for r in g.rotations)
    return all(i in present for i in range(3, n + 1))


def faces_cover(g: PlaneGraph, n: int) -> bool:
    present = set(g.face_set.lengths())
    return all(i in present for i in range(3, n + 1))


def satisfies_Sn(g: PlaneGraph, n: int) -> bool:
    """Some vertex of degree i and some face of length i, for every 3 <= i <= n."""
    if n < 3:
        raise BadN(f"n must be >= 3, got {n}")
    _require_polyhedral(g)
    return degrees_cover(g, n) and faces_cover(g, n)


def largest_Sn(g: PlaneGraph) -> int:
    """Largest n with S_n, or 2 when even S_3 fails."""
    n = 2
    while degrees_cover(g, n + 1) and faces_cover(g, n + 1):
        n += 1
    return n


def is_self_dual(g: PlaneGraph) -> bool:
    """Isomorphic to its dual, decided by canonical codes."""
    _require_polyhedral(g)
    if g.q != 2 * g.p - 2 or degree_sequence(g) != face_vector(g):
        return False
    return canonical_code(g) == canonical_code(dual(g))


# ---------------------------------------------------------------------------
# bounds


def edge_lower_bound(g: PlaneGraph, n: int) -> tuple[int, int]:
    """``(2q, (n-2)(n-3)/2 + 3p)``; requires every degree 3..n to occur."""
    if not degrees_cover(g, n):
        raise HypothesisNotMet(f"vertex degrees do not cover 3..{n}")
    return 2 * g.q, (n - 2) * (n - 3) // 2 + 3 * g.p


def edge_upper_bound(g: PlaneGraph, n: int) -> tuple[int, int]:
    """``(2q, 6p - 12 - (n-3)(n-2))``; requires every face size 3..n to occur."""
    if not faces_cover(g, n):
        raise HypothesisNotMet(f"face sizes do not cover 3..{n}")
    return 2 * g.q, 6 * g.p - 12 - (n - 3) * (n - 2)


@dataclass(frozen=True)
class BoundRow:
    check: str
    status: str  # "pass", "fail" or "n/a"
    detail: str
    tight: bool = False


def check_bounds(g: PlaneGraph, n: int) -> list[BoundRow]:
    """Evaluate the three conditional bounds; unmet hypotheses give ``n/a``."""
    _require_polyhedral(g)
    rows = []
    try:
        lhs, rhs = edge_lower_bound(g, n)
        rows.append(BoundRow("bound_edges_low", "pass" if lhs >= rhs else "fail", f"2q={lhs} >= {rhs}", lhs == rhs))
    except HypothesisNotMet as e:
        rows.append(BoundRow("bound_edges_low", "n/a", str(e)))
    try:
        lhs, rhs = edge_upper_bound(g, n)
        rows.append(BoundRow("bound_edges_high", "pass" if lhs <= rhs else "fail", f"2q={lhs} <= {rhs}", lhs == rhs))
    except HypothesisNotMet as e:
        rows.append(BoundRow("bound_edges_high", "n/a", str(e)))
    if degrees_cover(g, n) and faces_cover(g, n):
        m = minimal_order(n)
        rows.append(BoundRow("bound_order", "pass" if g.p >= m else "fail", f"p={g.p} >= {m}", g.p == m))
    else:
        rows.append(BoundRow("bound_order", "n/a", f"S_{n} does not hold"))
    return rows
