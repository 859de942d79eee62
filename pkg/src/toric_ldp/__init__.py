"""Toric log Del Pezzo surfaces of Picard number one and index at most 3."""

from .classification import (
    SurfaceRecord,
    classify,
    enumerate_admissible,
    fan_from_triple,
    identify_quotient,
    is_admissible,
    mod9_prefilter,
    type_families,
)
from .cones import (
    ConeParams,
    cone_params,
    hj_expansion,
    index3_membership,
    local_index,
    local_K_self_intersection,
    resolution_rays,
)
from .fans import (
    CompleteFan,
    K_squared,
    build_fan,
    is_ldp,
    lattice_point_counts,
    picard_inequality_holds,
    polar_index,
    r_invariants,
    scott_inequality_holds,
    surface_index,
)
from .graphs import Wve2cGraph, canonical_key, graph_of, isomorphic, reverse_graph
from .lattice import (
    ConePQ,
    LatticeVector,
    UnimodularMap,
    cone_pq,
    cone_pq_witness,
    cones_equivalent,
    ext_gcd,
    normalize_cone,
    socius,
)
from .oracle import oracle_classify, stability_check
from .snf import smith_normal_form

__version__ = "0.1.0"
