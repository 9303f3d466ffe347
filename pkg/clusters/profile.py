"""Cluster statistics of a walk path and the sign they determine.

A profile holds the move counts, cluster counts, size-one and size-two cluster
counts on both sides, the number of alternating S/M groups in the L mask, the
number of singular R clusters sitting between a singular and a non-singular L
cluster, and the three-bit end code of the L mask.
"""
from dataclasses import astuple, dataclass
from itertools import groupby

from clusters.mask import MARGINAL, MULTI, SINGULAR, cluster_mask, clusters
from paths.sequences import SequenceError, parse_sequence, require_walk_prefix

# concrete paths only ever end in one of these; 011 lumps 010 and 001 together
# for paths whose last move is R R
CONCRETE_ENDS = ("001", "010", "110", "101")
FORMULA_ENDS = CONCRETE_ENDS + ("011",)


class UnclassifiableSequence(SequenceError):
    """A valid sequence whose L mask has no end code: no L cluster, or only the marginal one."""

    def __init__(self, seq: str, reason: str):
        super().__init__(f"cannot classify the end of {seq!r}: {reason}")
        self.seq = seq
        self.reason = reason


@dataclass(frozen=True)
class ClusterProfile:
    n_left: int
    n_right: int
    left_clusters: int
    right_clusters: int
    left_singles: int
    right_singles: int
    left_pairs: int
    right_pairs: int
    groups: int
    flips: int
    end: str

    def __post_init__(self):
        if self.end not in FORMULA_ENDS:
            raise ValueError(f"unknown end code {self.end!r}")

    @property
    def steps(self) -> int:
        return self.n_left + self.n_right - 2

    @property
    def position(self) -> int:
        return self.n_right - self.n_left

    @property
    def end_bits(self):
        return tuple(int(ch) for ch in self.end)

    def as_tuple(self):
        return astuple(self)


def _side_counts(runs, direction):
    sizes = [size for d, size in runs if d == direction]
    return sum(sizes), len(sizes), sizes.count(1), sizes.count(2)


def profile(seq: str, walk_prefix: bool = True) -> ClusterProfile:
    """Cluster statistics of seq; walk paths (the default) must start with RL."""
    seq = require_walk_prefix(seq) if walk_prefix else parse_sequence(seq)
    runs = clusters(seq)
    mask = cluster_mask(seq)
    n_left, c_left, l1, l2 = _side_counts(runs, "L")
    n_right, c_right, r1, r2 = _side_counts(runs, "R")

    left_kinds = [sym.kind for sym in mask if sym.direction == "L"]
    if not left_kinds:
        raise UnclassifiableSequence(seq, "no L cluster")
    if left_kinds == [MARGINAL]:
        raise UnclassifiableSequence(seq, "only the marginal L cluster")
    if left_kinds[-1] == MARGINAL:
        end = "110" if left_kinds[-2] == SINGULAR else "101"
    else:
        end = "010" if left_kinds[-1] == SINGULAR else "001"

    groups = sum(1 for _ in groupby(k for k in left_kinds if k != MARGINAL))

    flips = 0
    for i, sym in enumerate(mask):
        if sym.direction != "R" or sym.kind != SINGULAR:
            continue
        around = {mask[i - 1].kind, mask[i + 1].kind}
        if SINGULAR in around and around & {MULTI, MARGINAL}:
            flips += 1

    return ClusterProfile(n_left, n_right, c_left, c_right, l1, r1, l2, r2, groups, flips, end)


def phase_from_profile(p: ClusterProfile) -> int:
    exponent = p.steps + p.left_clusters + p.right_clusters + p.left_pairs + p.right_pairs + p.flips
    return -1 if exponent % 2 else 1


def size_regime(clusters_count: int, singles: int, pairs: int) -> str:
    """single: every cluster has size one; pairs: every longer cluster has size two."""
    if singles == clusters_count:
        return "single"
    if pairs == clusters_count - singles:
        return "pairs"
    return "mixed"
