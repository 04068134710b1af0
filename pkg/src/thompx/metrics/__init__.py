"""Circuit complexity, word lengths and distortion estimates"""

from thompx.metrics.asymmetry import (
    AsymmetryConstants,
    PermutationSizes,
    QuadraticAudit,
    alpha_profile,
    asymmetry_report,
    delta_profiles,
    inverse_size_mismatches,
    permutation_sizes,
    quadratic_audit,
)
from thompx.metrics.cayley import (
    cayley_ball,
    cayley_distance,
    inverse_symmetry_violations,
    monotone_wordlength,
    wordlength_asym_profile,
)
from thompx.metrics.profiles import (
    DistortionProfile,
    LengthProfile,
    distortion_of,
    parse_dump,
    profile_from_pairs,
    table_line,
)
from thompx.metrics.schreier import (
    SchreierCoset,
    coset_of,
    default_schreier_generators,
    schreier_ball,
    schreier_D,
)
from thompx.metrics.search import (
    DEFAULT_BASIS,
    ReachabilityIndex,
    find_min_circuit,
    min_circuit_size,
    reachability_index,
)

__all__ = [
    "AsymmetryConstants",
    "DEFAULT_BASIS",
    "DistortionProfile",
    "LengthProfile",
    "PermutationSizes",
    "QuadraticAudit",
    "ReachabilityIndex",
    "SchreierCoset",
    "alpha_profile",
    "asymmetry_report",
    "cayley_ball",
    "cayley_distance",
    "coset_of",
    "default_schreier_generators",
    "delta_profiles",
    "distortion_of",
    "find_min_circuit",
    "inverse_size_mismatches",
    "inverse_symmetry_violations",
    "min_circuit_size",
    "monotone_wordlength",
    "parse_dump",
    "permutation_sizes",
    "profile_from_pairs",
    "quadratic_audit",
    "reachability_index",
    "schreier_D",
    "schreier_ball",
    "table_line",
    "wordlength_asym_profile",
]
