"""Exact invariants of two-dimensional log pairs and their cone singularities.

Marked spheres, polarized orbifold cones over them, local orbifold Euler
numbers of line arrangements and cones, normalized volumes, and log Chern
number audits. Every quantity is a :class:`fractions.Fraction`.
"""

from logpair.errors import (
    LogPairError,
    NotKlt,
    NotSemistable,
    PreconditionViolated,
    UnsupportedDimension,
    WeightOutOfRange,
)
from logpair.pairs import (
    MarkedSphere,
    PairClass,
    Positivity,
    Singularity,
    classify,
    is_k_semistable,
    is_k_stable,
    log_canonical_degree,
)
from logpair.cones import (
    ConeClass,
    DegenerationData,
    LineArrangement,
    PolarizedCone,
    WeightedPlanePair,
    classify_cone,
    cone_normalized_volume,
    destabilizing_degeneration,
    lambda_of,
    normalized_volume,
    quotient_of_weighted_plane,
    rescale_polarization,
)
from logpair.euler import (
    CaseTag,
    EulerResult,
    Method,
    Rank2BundleData,
    euler_line_arrangement,
    euler_orbifold_cone,
    euler_scaling,
    euler_via_langer,
    langer_local_c2,
    sbar,
)
from logpair.chern import (
    Component,
    ExtensionSheafInvariants,
    LogChernNumbers,
    SurfaceChernData,
    bogomolov_discriminant,
    extension_sheaf_invariants,
    log_chern,
    my_cy_check,
    my_fano_check,
)

__version__ = "0.1.0"
