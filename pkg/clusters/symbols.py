"""Counting symbols used by the amplitude sums.

comp_count: compositions of u into m parts with v parts equal to 2 and none
equal to 1 (returns 1 where no such composition exists, so it can sit in a
product unguarded). placement_count: choices of m of u places with exactly r
among a marked block of x. group_perm_count: arrangements of x S and y M with
g alternating groups whose last element is fixed by t1t0.
"""
from functools import lru_cache
from math import comb

END_PAIRS = ("01", "10", "11")


def binom(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def indicator_positive(v: int) -> int:
    return 1 if v > 0 else 0


def in_range(low: int, high: int, value: int) -> int:
    return 1 if low <= value <= high else 0


def floor_half(v: int) -> int:
    return v // 2


def ceil_half(v: int) -> int:
    return -(-v // 2)


@lru_cache(maxsize=None)
def comp_count(u: int, m: int, v: int) -> int:
    if u >= 3 * m - v and m > v:
        return binom(m, v) * binom(u - 2 * m - 1, m - v - 1)
    return 1


@lru_cache(maxsize=None)
def placement_count(u: int, m: int, x: int, r: int) -> int:
    if 0 <= r <= x and 0 <= m - r <= u - x:
        return binom(x, r) * binom(u - x, m - r)
    return 0


def _end_flags(t1t0: str):
    if t1t0 not in END_PAIRS:
        raise ValueError(f"t1t0 must be one of {END_PAIRS}, got {t1t0!r}")
    return int(t1t0[0]), int(t1t0[1])


def _alternating_terms(x, y, g, t1, t0):
    lo, hi = floor_half(g), ceil_half(g)
    ends_m = binom(x - 1, lo - 1) * binom(y - 1, hi - 1)
    ends_s = binom(x - 1, hi - 1) * binom(y - 1, lo - 1)
    return t0 * ends_m + t1 * ends_s


@lru_cache(maxsize=None)
def group_perm_count(x: int, y: int, g: int, t1t0: str) -> int:
    """Gated piecewise form; agrees with enumeration for all arguments.

    The one-group row only applies when the lone kind is allowed last, and the
    odd-g boundary rows only when their last element matches t1t0. The empty
    arrangement is not counted.
    """
    t1, t0 = _end_flags(t1t0)
    if x < 0 or y < 0 or x + y == 0:
        return 0
    upper = 2 * min(x, y) + t1 * indicator_positive(x - y) + t0 * indicator_positive(y - x)
    if 2 <= g <= upper:
        return _alternating_terms(x, y, g, t1, t0)
    if g == 1 and x * y == 0:
        return t1 if x > 0 else t0
    lo, hi = floor_half(g), ceil_half(g)
    if t0 and lo <= x < hi <= y:
        return binom(x - 1, lo - 1) * binom(y - 1, hi - 1)
    if t1 and lo <= y < hi <= x:
        return binom(x - 1, hi - 1) * binom(y - 1, lo - 1)
    return 0


@lru_cache(maxsize=None)
def group_perm_count_literal(x: int, y: int, g: int, t1t0: str) -> int:
    """Piecewise form taken literally, without the last-element gates.

    The rows overlap at g == 1, x*y == 0; the one-group row is tried first there.
    """
    t1, t0 = _end_flags(t1t0)
    upper = 2 * min(x, y) + t1 * indicator_positive(x - y) + t0 * indicator_positive(y - x)
    if 2 <= g <= upper:
        return _alternating_terms(x, y, g, t1, t0)
    if x * y == 0 and x + y > 0 and g == 1:
        return 1
    lo, hi = floor_half(g), ceil_half(g)
    if lo <= x < hi <= y:
        return binom(x - 1, lo - 1) * binom(y - 1, hi - 1)
    if lo <= y < hi <= x:
        return binom(x - 1, hi - 1) * binom(y - 1, lo - 1)
    return 0
