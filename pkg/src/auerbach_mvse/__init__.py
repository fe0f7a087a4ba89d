"""Exact computations with Auerbach bases and minimal-volume sufficient
enlargements of polyhedral normed spaces."""

from .auerbach import (
    AuerbachFamily,
    Basis,
    biorthogonal,
    is_auerbach,
    lower_auerbach_bases,
    min_parallelepiped,
    upper_auerbach_bases,
)
from .mvse import (
    NON_PARALLELEPIPEDAL,
    PARALLELEPIPED_ONLY,
    DecisionReport,
    HexagonWitness,
    MvseCandidate,
    construct_nonparallelepipedal,
    decide,
    hexagon_regular_equiv,
    validate_mvse_candidate,
)
from .polytope import SectionPolygon, SymPolytope, Zonotope, gauge_norm, polar_dual, section2
from .projections import exists_norm_one_projection, operator_norm
from .spaces import (
    PolyhedralSpace,
    SubspaceEmbedding,
    make_l1_sum,
    make_linf_subspace,
    make_linf_sum,
    make_lp_ball,
    rational_hexagon_space,
    sum_zero_space,
)

__version__ = "0.1.0"
