"""Rational type of moment-angle complexes over finite simplicial complexes.

Decides whether Z(K; (D^2, S^1)) is rationally elliptic (a product of odd
spheres and a disk, read off from pairwise-disjoint minimal non-faces) or
rationally hyperbolic (witnessed by a full subcomplex whose non-faces all
intersect), and verifies the verdict with two independent cohomology
engines plus a rational homotopy rank calculator.
"""

from .cells import MomentAngleCellComplex, build, oracle_betti
from .classify import RationalTypeVerdict, classify, elliptic_model, find_witness
from .cohomology import (
    CochainComplexQ,
    CohomologyClass,
    HochsterTable,
    hochster_betti,
    hochster_table,
    is_trivial_ring,
    reduced_cohomology,
    star_product,
    star_product_scan,
)
from .complexes import (
    SimplicialComplex,
    VertexSet,
    boundary_simplex,
    from_facets,
    full_subcomplex,
    is_face,
    join,
    rank_relabel,
    relabel_complex,
    simplex,
)
from .errors import (
    GhostVertexError,
    InputError,
    MacError,
    NotApplicableError,
    ResourceError,
)
from .generate import cross_polytope, cycle, generate, random_complex
from .loops import (
    GrowthCertificate,
    HomotopyRankSeries,
    SphereModel,
    free_lie_ranks,
    growth_certificate,
    product_ranks,
    wedge_model,
)
from .nonfaces import (
    NonfaceFamily,
    NonfaceGraph,
    component_decomposition,
    ghost_split,
    intersection_graph,
    minimal_nonfaces,
    reconstruct,
    relabel_family,
    restrict_family,
    support,
)

__version__ = "0.1.0"

__all__ = [
    "CochainComplexQ",
    "CohomologyClass",
    "GhostVertexError",
    "GrowthCertificate",
    "HochsterTable",
    "HomotopyRankSeries",
    "InputError",
    "MacError",
    "MomentAngleCellComplex",
    "NonfaceFamily",
    "NonfaceGraph",
    "NotApplicableError",
    "RationalTypeVerdict",
    "ResourceError",
    "SimplicialComplex",
    "SphereModel",
    "VertexSet",
    "boundary_simplex",
    "build",
    "classify",
    "component_decomposition",
    "cross_polytope",
    "cycle",
    "elliptic_model",
    "find_witness",
    "free_lie_ranks",
    "from_facets",
    "full_subcomplex",
    "generate",
    "ghost_split",
    "growth_certificate",
    "hochster_betti",
    "hochster_table",
    "intersection_graph",
    "is_face",
    "is_trivial_ring",
    "join",
    "minimal_nonfaces",
    "oracle_betti",
    "product_ranks",
    "random_complex",
    "rank_relabel",
    "reconstruct",
    "reduced_cohomology",
    "relabel_complex",
    "relabel_family",
    "restrict_family",
    "simplex",
    "star_product",
    "star_product_scan",
    "support",
    "wedge_model",
]
