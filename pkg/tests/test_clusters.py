from collections import defaultdict
from itertools import combinations, product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clusters.brute_force import (
    count_compositions,
    count_grouped_permutations,
    count_placements,
    realized_profiles,
)
from clusters.mask import cluster_mask, clusters, format_mask
from clusters.profile import (
    ClusterProfile,
    UnclassifiableSequence,
    phase_from_profile,
    profile,
    size_regime,
)
from clusters.ranges import clsize2_range, g_r_ranges, g_range, r_range
from clusters.symbols import comp_count, group_perm_count, group_perm_count_literal, placement_count
from closed_form.counting import sequence_count
from paths.oracle import walk_paths
from paths.sequences import SequenceError

UP_TO_TWELVE = range(0, 13)


def test_clusters():
    assert clusters("RLLRRRL") == [("R", 1), ("L", 2), ("R", 3), ("L", 1)]


@pytest.mark.parametrize(
    "seq, mask",
    [
        ("LRRLLLRRLRLRRRLLLLR", "I M\u0304 M M\u0304 S S\u0304 S M\u0304 M I\u0304"),
        ("RLRL", "I\u0304 S S\u0304 I"),
        ("RLLL", "I\u0304 M"),
    ],
)
def test_cluster_mask(seq, mask):
    assert format_mask(cluster_mask(seq)) == mask


def test_profile_examples():
    assert profile("RLRL") == ClusterProfile(2, 2, 2, 2, 2, 2, 0, 0, 1, 1, "110")
    assert profile("RLLL") == ClusterProfile(3, 1, 1, 1, 0, 1, 0, 0, 1, 0, "001")


def test_profile_groups_of_long_example():
    assert profile("LRRLLLRRLRLRRRLLLLR", walk_prefix=False).groups == 3


def test_profile_rejects():
    with pytest.raises(SequenceError):
        profile("LRRLLLR")
    with pytest.raises(UnclassifiableSequence, match="marginal"):
        profile("RRRL", walk_prefix=False)
    with pytest.raises(UnclassifiableSequence, match="no L cluster"):
        profile("RRRR", walk_prefix=False)


def test_phase_examples():
    assert phase_from_profile(profile("RLRL")) == -1
    assert phase_from_profile(profile("RLLL")) == 1


def test_phase_equals_path_sign():
    for n in range(1, 15):
        for seq, outcome in walk_paths(n):
            assert phase_from_profile(profile(seq)) == outcome.sign, seq


def test_concrete_end_codes_only():
    for n in range(1, 9):
        for seq, _ in walk_paths(n):
            assert profile(seq).end in ("001", "010", "110", "101")


def test_size_regime():
    assert size_regime(3, 3, 0) == "single"
    assert size_regime(3, 1, 2) == "pairs"
    assert size_regime(3, 1, 1) == "mixed"


@pytest.mark.parametrize("u, m, v, expected", [(4, 2, 2, 1), (7, 2, 1, 2), (5, 2, 0, 1)])
def test_comp_count_examples(u, m, v, expected):
    assert comp_count(u, m, v) == expected


def test_comp_count_against_enumeration():
    for u, m, v in product(UP_TO_TWELVE, repeat=3):
        if m > v and u >= 3 * m - v:
            assert comp_count(u, m, v) == count_compositions(u, m, v), (u, m, v)
        else:
            assert comp_count(u, m, v) == 1, (u, m, v)


@pytest.mark.parametrize("args, expected", [((3, 2, 1, 1), 2), ((3, 2, 1, 2), 0), ((5, 3, 2, 1), 6)])
def test_placement_count_examples(args, expected):
    assert placement_count(*args) == expected


@given(
    u=st.integers(min_value=0, max_value=12),
    m=st.integers(min_value=0, max_value=12),
    x=st.integers(min_value=0, max_value=12),
    r=st.integers(min_value=0, max_value=12),
)
@settings(max_examples=300)
def test_placement_count_against_enumeration(u, m, x, r):
    if x <= u:
        assert placement_count(u, m, x, r) == count_placements(u, m, x, r)


def test_placement_count_exhaustive():
    for u in UP_TO_TWELVE:
        for x in range(0, u + 1):
            for m in UP_TO_TWELVE:
                by_r = defaultdict(int)
                for chosen in combinations(range(u), m):
                    by_r[sum(1 for i in chosen if i < x)] += 1
                for r in UP_TO_TWELVE:
                    assert placement_count(u, m, x, r) == by_r[r], (u, m, x, r)


@pytest.mark.parametrize("args, expected", [((2, 2, 2, "11"), 2), ((0, 3, 1, "01"), 1), ((2, 1, 3, "11"), 1)])
def test_group_perm_count_examples(args, expected):
    assert group_perm_count(*args) == expected


@pytest.mark.parametrize("t1t0", ["01", "10", "11"])
def test_group_perm_count_against_enumeration(t1t0):
    for x, y in product(UP_TO_TWELVE, repeat=2):
        for g in range(0, x + y + 2):
            assert group_perm_count(x, y, g, t1t0) == count_grouped_permutations(x, y, g, t1t0), (x, y, g)


def test_literal_symbol_agrees_when_both_kinds_may_end():
    for x, y in product(UP_TO_TWELVE, repeat=2):
        if x + y == 0:
            continue
        for g in range(1, x + y + 1):
            assert group_perm_count_literal(x, y, g, "11") == group_perm_count(x, y, g, "11"), (x, y, g)


def test_group_perm_count_rejects_bad_end():
    with pytest.raises(ValueError):
        group_perm_count(1, 1, 2, "00")


@pytest.mark.parametrize("args, expected", [((4, 2, 0), {2}), ((7, 3, 1), {0, 1}), ((3, 3, 3), {0})])
def test_clsize2_range_examples(args, expected):
    assert clsize2_range(*args) == expected


def test_rlrl_ranges():
    g_values, r_for = g_r_ranges(2, 2, 2, 2, "110")
    assert list(g_values) == [1]
    assert list(r_for(1)) == [1]


@pytest.fixture(scope="module")
def profiles_up_to_twelve():
    seen = {}
    for n in range(1, 13):
        seen.update(realized_profiles(n))
    return seen


def test_ranges_are_sound(profiles_up_to_twelve):
    for p in profiles_up_to_twelve:
        assert p.groups in g_range(p.left_clusters, p.left_singles, p.end), p
        assert p.flips in r_range(p.right_clusters, p.right_singles, p.groups, p.end), p
        assert p.left_pairs in clsize2_range(p.n_left, p.left_clusters, p.left_singles), p
        assert p.right_pairs in clsize2_range(p.n_right, p.right_clusters, p.right_singles), p


def test_group_range_is_attained(profiles_up_to_twelve):
    realized = defaultdict(set)
    for p in profiles_up_to_twelve:
        realized[(p.left_clusters, p.left_singles, p.end)].add(p.groups)
    for (c_left, c_left1, end), groups in realized.items():
        assert groups == set(g_range(c_left, c_left1, end)), (c_left, c_left1, end)


def test_flip_range_is_attained(profiles_up_to_twelve):
    realized = defaultdict(set)
    for p in profiles_up_to_twelve:
        realized[(p.right_clusters, p.right_singles, p.groups, p.end)].add(p.flips)
    for (c_right, c_right1, g, end), flips in realized.items():
        assert flips == set(r_range(c_right, c_right1, g, end)), (c_right, c_right1, g, end)


@pytest.mark.parametrize("side", ["left", "right"])
def test_size_two_range_is_attained(profiles_up_to_twelve, side):
    realized = defaultdict(set)
    for p in profiles_up_to_twelve:
        moves, count, singles, pairs = (
            (p.n_left, p.left_clusters, p.left_singles, p.left_pairs)
            if side == "left"
            else (p.n_right, p.right_clusters, p.right_singles, p.right_pairs)
        )
        realized[(moves, count, singles)].add(pairs)
    for (moves, count, singles), pairs in realized.items():
        assert pairs == clsize2_range(moves, count, singles), (side, moves, count, singles)


def test_sequence_count_matches_enumeration(profiles_up_to_twelve):
    # sequences of up to 14 letters, RL prefix included
    for p, multiplicity in profiles_up_to_twelve.items():
        assert sequence_count(p) == multiplicity, p


def test_profiles_partition_paths():
    for n in range(1, 10):
        by_moves = defaultdict(int)
        for p in realized_profiles(n):
            by_moves[(p.n_left, p.n_right)] += sequence_count(p)
        for (n_left, _), total in by_moves.items():
            # the RL prefix is fixed; the rest is a free word with these counts
            assert total == comb(n, n_left - 1)
