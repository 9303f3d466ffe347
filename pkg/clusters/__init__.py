from .mask import MaskSymbol, cluster_mask, clusters, format_mask
from .profile import (
    CONCRETE_ENDS,
    FORMULA_ENDS,
    ClusterProfile,
    UnclassifiableSequence,
    phase_from_profile,
    profile,
    size_regime,
)
from .ranges import clsize2_range, g_r_ranges, g_range, positive_places, r_range
from .symbols import (
    binom,
    comp_count,
    delta,
    group_perm_count,
    group_perm_count_literal,
    indicator_positive,
    placement_count,
)

__all__ = [
    "MaskSymbol",
    "cluster_mask",
    "clusters",
    "format_mask",
    "CONCRETE_ENDS",
    "FORMULA_ENDS",
    "ClusterProfile",
    "UnclassifiableSequence",
    "phase_from_profile",
    "profile",
    "size_regime",
    "clsize2_range",
    "g_r_ranges",
    "g_range",
    "positive_places",
    "r_range",
    "binom",
    "comp_count",
    "delta",
    "group_perm_count",
    "group_perm_count_literal",
    "indicator_positive",
    "placement_count",
]
