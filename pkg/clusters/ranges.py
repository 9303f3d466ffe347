from typing import Callable, Set, Tuple

from clusters.symbols import delta, indicator_positive


def clsize2_range(N: int, C: int, C1: int) -> Set[int]:
    """Possible counts of size-two clusters among C clusters of N moves, C1 of size one."""
    values = set()
    if C1 == 2 * C - N:
        values.add(C - C1)
    values.update(range(max(0, 3 * C - 2 * C1 - N), C - C1))
    return values


def g_range(c_left: int, c_left1: int, end: str) -> range:
    t2, t1, t0 = (int(ch) for ch in end)
    x = c_left1 - t2
    y = c_left - c_left1
    low = 2 - delta(c_left1, t2) - delta(c_left, c_left1)
    high = 2 * min(x, y) + t1 * indicator_positive(x - y) + t0 * indicator_positive(y - x)
    return range(low, high + 1)


def positive_places(g: int, end: str, wiring: str = "t1t2") -> int:
    """Places between L clusters where a size-one R cluster flips the sign."""
    t2, t1, t0 = (int(ch) for ch in end)
    bonus = t1 * t2 if wiring == "t1t2" else t1 * t0
    return g + bonus - 1


def r_range(c_right: int, c_right1: int, g: int, end: str) -> range:
    places = positive_places(g, end)
    return range(max(0, c_right1 - c_right + places), min(c_right1 - 1, places) + 1)


def g_r_ranges(
    c_left: int, c_left1: int, c_right: int, c_right1: int, end: str
) -> Tuple[range, Callable[[int], range]]:
    return (
        g_range(c_left, c_left1, end),
        lambda g: r_range(c_right, c_right1, g, end),
    )
