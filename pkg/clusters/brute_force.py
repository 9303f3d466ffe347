"""Enumerators the counting symbols are checked against."""
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Tuple

from clusters.profile import profile
from paths.sequences import iterate_sequences


def compositions(u: int, m: int) -> Iterator[Tuple[int, ...]]:
    if m == 0:
        if u == 0:
            yield ()
        return
    for first in range(1, u - m + 2):
        for rest in compositions(u - first, m - 1):
            yield (first,) + rest


def count_compositions(u: int, m: int, v: int) -> int:
    """Compositions of u into m parts, none equal to 1, exactly v equal to 2."""
    return sum(
        1 for parts in compositions(u, m) if 1 not in parts and parts.count(2) == v
    )


def count_placements(u: int, m: int, x: int, r: int) -> int:
    return sum(1 for chosen in combinations(range(u), m) if sum(1 for i in chosen if i < x) == r)


def count_grouped_permutations(x: int, y: int, g: int, t1t0: str) -> int:
    """Words of x S and y M with g runs whose last letter t1t0 allows.

    Counted by stripping the last letter one step at a time.
    """
    if x < 0 or y < 0 or x + y == 0:
        return 0
    total = 0
    if t1t0[0] == "1":
        total += _words(x, y, g, "S")
    if t1t0[1] == "1":
        total += _words(x, y, g, "M")
    return total


@lru_cache(maxsize=None)
def _words(x: int, y: int, runs: int, last: str) -> int:
    if last == "S":
        x -= 1
    else:
        y -= 1
    if x < 0 or y < 0 or runs < 1:
        return 0
    if x + y == 0:
        return 1 if runs == 1 else 0
    other = "M" if last == "S" else "S"
    return _words(x, y, runs, last) + _words(x, y, runs - 1, other)


def realized_profiles(n: int):
    """Every profile reached by some path of n steps, with its multiplicity."""
    seen = {}
    for seq in iterate_sequences(n):
        p = profile(seq)
        seen[p] = seen.get(p, 0) + 1
    return seen
