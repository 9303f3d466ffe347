"""Fraction of the sequences sharing a profile that end in one basis state.

Every tail is a function of the profile fields. Positive places are the slots
where a singular R cluster flips the sign; the remaining slots are negative.
"""
from fractions import Fraction
from typing import Callable, Dict

from clusters.profile import ClusterProfile
from clusters.ranges import positive_places

Tail = Callable[[ClusterProfile], Fraction]


def _negative_places(p: ClusterProfile) -> int:
    return p.right_clusters - 1 - positive_places(p.groups, p.end)


def _negative_singles(p: ClusterProfile) -> int:
    return p.right_singles - 1 - p.flips


def last_left_pair(p: ClusterProfile) -> Fraction:
    return Fraction(p.left_pairs, p.left_clusters - p.left_singles)


def last_left_long(p: ClusterProfile) -> Fraction:
    multi = p.left_clusters - p.left_singles
    return Fraction(multi - p.left_pairs, multi)


def positive_multi(p: ClusterProfile) -> Fraction:
    places = positive_places(p.groups, p.end)
    return Fraction(places - p.flips, places)


def positive_single(p: ClusterProfile) -> Fraction:
    return Fraction(p.flips, positive_places(p.groups, p.end))


def negative_single(p: ClusterProfile) -> Fraction:
    return Fraction(_negative_singles(p), _negative_places(p))


def negative_multi(p: ClusterProfile) -> Fraction:
    places = _negative_places(p)
    return Fraction(places - _negative_singles(p), places)


def negative_right_pair(p: ClusterProfile) -> Fraction:
    return negative_multi(p) * Fraction(p.right_pairs, p.right_clusters - p.right_singles)


def negative_right_long(p: ClusterProfile) -> Fraction:
    multi = p.right_clusters - p.right_singles
    return negative_multi(p) * Fraction(multi - p.right_pairs, multi)


TAILS: Dict[str, Tail] = {
    "last_left_pair": last_left_pair,
    "last_left_long": last_left_long,
    "positive_multi": positive_multi,
    "positive_single": positive_single,
    "negative_single": negative_single,
    "negative_multi": negative_multi,
    "negative_right_pair": negative_right_pair,
    "negative_right_long": negative_right_long,
}


def get_tail(name: str) -> Tail:
    try:
        return TAILS[name]
    except KeyError:
        raise ValueError(f"unknown tail {name!r}; known: {', '.join(sorted(TAILS))}") from None
