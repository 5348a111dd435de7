"""Exact Green-correspondence toolkit for SL2(F_p) and its Borel subgroup.

The library names isomorphism classes (``ULabel`` on the Borel side,
``WalkLabel`` / ``GSimpleLabel`` on the SL2 side), computes the Green
correspondence in both directions, decomposes inductions and restrictions
in closed form, and cross-checks everything against explicit matrix modules
over F_p (the ``oracle`` module).  All arithmetic is exact.
"""

from .labels import (
    BDecomposition,
    GDecomposition,
    GSimpleLabel,
    InconsistentDataError,
    InternalConsistencyError,
    NotProjectiveError,
    PrimeContext,
    ULabel,
    WalkLabel,
    canonicalize,
    canonicalize_walk,
    count_nonprojective_per_block,
    enumerate_canonical_walks,
    enumerate_nonprojective_ulabels,
    validate_ulabel,
)
from .borel import (
    almost_split,
    b_boundaries,
    b_cartan,
    b_hook_distance,
    decompose_projective_b,
    omega2,
    theta,
)
from .gtree import (
    brauer_tree,
    c_abt,
    edge_to_simple,
    expand_walk,
    g_boundaries,
    g_cartan,
    g_hooks,
    L,
    projective_structure,
    simple_to_edge,
    walk_dim,
    walk_factors,
    walk_top_socle,
)
from .correspondence import (
    c_abt_via_walk,
    green_of_u,
    green_of_walk,
    verify_bijection,
)
from .indres import (
    decompose_projective_g,
    ell,
    g_decomposition_dim,
    ind_simple_b_factors,
    ind_u,
    induced_regular_check,
    lift_decomposition,
    res_projective_g,
    res_simple_g,
    res_walk,
)

__version__ = "0.1.0"
