"""Self-dual and S_n-minimal polyhedra via edge splitting and radial graphs."""

from selfdual.algorithms import (
    admissible_sequence,
    algorithm1,
    algorithm2,
    algorithm2_radial,
    algorithm3_oracle,
    minimal_order,
    self_dual_family,
)
from selfdual.embedding import (
    PlaneGraph,
    build,
    canonical_code,
    degree_sequence,
    dual,
    face_vector,
    faces,
    is_3connected,
    is_isomorphic,
)
from selfdual.radial import QuadGraph, primal, radial
from selfdual.seeds import h5_seed, pseudo_double_wheel, tetrahedron, wheel
from selfdual.splitting import PPosition, SplitTriple, edge_split, p_move
from selfdual.verification import check_bounds, is_polyhedral, is_self_dual, satisfies_Sn

__all__ = [
    "PPosition",
    "PlaneGraph",
    "QuadGraph",
    "SplitTriple",
    "admissible_sequence",
    "algorithm1",
    "algorithm2",
    "algorithm2_radial",
    "algorithm3_oracle",
    "build",
    "canonical_code",
    "check_bounds",
    "degree_sequence",
    "dual",
    "edge_split",
    "face_vector",
    "faces",
    "h5_seed",
    "is_3connected",
    "is_isomorphic",
    "is_polyhedral",
    "is_self_dual",
    "minimal_order",
    "p_move",
    "primal",
    "pseudo_double_wheel",
    "radial",
    "satisfies_Sn",
    "self_dual_family",
    "tetrahedron",
    "wheel",
]
