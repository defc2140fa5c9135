"""Named starting graphs."""

from __future__ import annotations

from selfdual.embedding import PlaneGraph, build
from selfdual.errors import BadArity, TooSmall
from selfdual.radial import QuadGraph, radial

# Counterclockwise rotations of the 7-vertex self-dual polyhedron with
# degree/face vector (5, 4, 3, 3, 3, 3, 3).  The labelling fixes the
# triples used by the H_n construction.
H5_ROTATIONS = {
    "v1": ("v2", "v7", "v5", "v6", "v4"),
    "v2": ("v1", "v4", "v3"),
    "v3": ("v2", "v5", "v7"),
    "v4": ("v2", "v1", "v6"),
    "v5": ("v6", "v1", "v7", "v3"),
    "v6": ("v4", "v1", "v5"),
    "v7": ("v5", "v1", "v3"),
}


def wheel(p: int) -> PlaneGraph:
    """The (p-1)-gonal pyramid: hub 0, rim 1..p-1 counterclockwise."""
    if p < 4:
        raise TooSmall(f"wheel needs p >= 4, got {p}")
    m = p - 1
    rot = [tuple(range(1, p))]
    for i in range(1, p):
        nxt = i % m + 1
        prv = (i - 2) % m + 1
        rot.append((nxt, 0, prv))
    return build(p, rot)


def tetrahedron() -> PlaneGraph:
    return wheel(4)


def pseudo_double_wheel(n: int) -> QuadGraph:
    """PDW_n, built as the radial graph of the wheel on n/2 vertices."""
    if n % 2 or n < 8:
        raise BadArity(f"pseudo double wheel needs an even order >= 8, got {n}")
    return radial(wheel(n // 2))


def h5_seed() -> PlaneGraph:
    """The labelled 7-vertex polyhedron used to start the H_n family."""
    ids = {name: int(name[1:]) - 1 for name in H5_ROTATIONS}
    rot = [tuple(ids[w] for w in H5_ROTATIONS[f"v{i + 1}"]) for i in range(7)]
    return build(7, rot, {i: f"v{i + 1}" for i in range(7)})


SEEDS = ("tetrahedron", "wheel:<p>", "pdw:<2p>", "h5")


def seed_by_name(text: str) -> PlaneGraph | QuadGraph:
    """Resolve a CLI seed name such as ``wheel:6`` or ``pdw:10``."""
    name, _, arg = text.partition(":")
    if name == "tetrahedron" and not arg:
        return tetrahedron()
    if name == "h5" and not arg:
        return h5_seed()
    if name == "wheel" and arg:
        return wheel(int(arg))
    if name == "pdw" and arg:
        return pseudo_double_wheel(int(arg))
    raise ValueError(f"unknown seed {text!r}; expected one of {', '.join(SEEDS)}")
