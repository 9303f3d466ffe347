from typing import Iterator, Tuple

from clusters.profile import ClusterProfile
from clusters.ranges import positive_places
from clusters.symbols import comp_count, group_perm_count, placement_count
from closed_form.parts import Regime

WIRINGS = ("t1t2", "t1t0")


def sequence_count(p: ClusterProfile, wiring: str = "t1t2") -> int:
    """Number of RL-prefixed sequences whose cluster statistics are p."""
    if wiring not in WIRINGS:
        raise ValueError(f"wiring must be one of {WIRINGS}, got {wiring!r}")
    t2, t1, t0 = p.end_bits
    left_multi = p.left_clusters - p.left_singles
    right_multi = p.right_clusters - p.right_singles
    masks = group_perm_count(p.left_singles - t2, left_multi, p.groups, f"{t1}{t0}")
    if not masks:
        return 0
    left_sizes = comp_count(p.n_left - p.left_singles, left_multi, p.left_pairs)
    slots = placement_count(
        p.right_clusters - 1,
        p.right_singles - 1,
        positive_places(p.groups, p.end, wiring),
        p.flips,
    )
    right_sizes = comp_count(p.n_right - p.right_singles, right_multi, p.right_pairs)
    return masks * left_sizes * slots * right_sizes


def size_options(moves: int, clusters: int, regime: Regime, min_singles: int = 0) -> Iterator[Tuple[int, int]]:
    """(size-one count, size-two count) pairs of one side for a regime."""
    if regime is Regime.SINGLE:
        if moves == clusters:
            yield clusters, 0
    elif regime is Regime.PAIRS:
        singles = 2 * clusters - moves
        if min_singles <= singles <= clusters - 1:
            yield singles, moves - clusters
    else:
        for singles in range(max(min_singles, 2 * clusters - moves + 1), clusters):
            for pairs in range(max(0, 3 * clusters - 2 * singles - moves), clusters - singles):
                yield singles, pairs
