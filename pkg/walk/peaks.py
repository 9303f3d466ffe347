from fractions import Fraction
from typing import List, Tuple

from walk.distribution import Distribution


def is_symmetric(dist: Distribution) -> bool:
    return all(dist.get(-k) == p for k, p in dist.probabilities.items())


def local_maxima(dist: Distribution) -> List[Tuple[int, Fraction]]:
    """Local maxima over each parity sublattice, neighbours at k-2 and k+2.

    A run of equal values counts as one maximum when it is strictly above the
    values just outside it; the run is reported at its member closest to 0.
    Result is sorted by probability descending, then |k|, then k.
    """
    found = []
    for parity in (0, 1):
        ks = [k for k in dist.probabilities if k % 2 == parity]
        if not ks:
            continue
        lattice = list(range(min(ks), max(ks) + 1, 2))
        i = 0
        while i < len(lattice):
            value = dist.get(lattice[i])
            end = i
            while end + 1 < len(lattice) and dist.get(lattice[end + 1]) == value:
                end += 1
            left = dist.get(lattice[i] - 2)
            right = dist.get(lattice[end] + 2)
            if value > 0 and value > left and value > right:
                k = min(lattice[i:end + 1], key=lambda x: (abs(x), x))
                found.append((k, value))
            i = end + 1
    found.sort(key=lambda kp: (-kp[1], abs(kp[0]), kp[0]))
    return found
