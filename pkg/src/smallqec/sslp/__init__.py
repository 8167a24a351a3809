from .angles import AngleVector, EmptySupport, SupportSets, bd_support_sets, enumerate_angle_vectors, support_sets
from .lp import phase1_feasible_exact, phase1_feasible_float
from .pipeline import (
    LpWitness,
    NonConverged,
    SslpCandidate,
    SslpHyper,
    block_optimize,
    lp_filter,
    lp_survivors,
    sslp_pipeline,
)

__all__ = [
    "AngleVector", "EmptySupport", "SupportSets", "bd_support_sets",
    "enumerate_angle_vectors", "support_sets", "phase1_feasible_exact",
    "phase1_feasible_float", "LpWitness", "NonConverged", "SslpCandidate",
    "SslpHyper", "block_optimize", "lp_filter", "lp_survivors", "sslp_pipeline",
]
