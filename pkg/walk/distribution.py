from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from amplitude.state_vector import StateVector
from walk.engine import run


@dataclass
class Distribution:
    """Position -> exact probability. Positions with probability 0 are absent."""
    probabilities: Dict[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.probabilities = {k: Fraction(p) for k, p in self.probabilities.items() if p}

    def get(self, k: int) -> Fraction:
        return self.probabilities.get(k, Fraction(0))

    def total(self) -> Fraction:
        return sum(self.probabilities.values(), Fraction(0))

    def rows(self) -> List[Tuple[int, Fraction]]:
        return sorted(self.probabilities.items())


def distribution(v: StateVector) -> Distribution:
    sums = {}
    for (k, _), (re, im) in v.entries.items():
        sums[k] = sums.get(k, 0) + re * re + im * im
    denom = 1 << v.scale
    return Distribution({k: Fraction(s, denom) for k, s in sums.items()})


def moments(dist: Distribution) -> Tuple[Fraction, Fraction]:
    """Exact mean and variance of the position."""
    mean = sum((k * p for k, p in dist.probabilities.items()), Fraction(0))
    second = sum((k * k * p for k, p in dist.probabilities.items()), Fraction(0))
    return mean, second - mean * mean


def simulate_distribution(memory: int, init: StateVector, n: int) -> Distribution:
    if init.memory != memory:
        raise ValueError(f"initial state has memory order {init.memory}, run asked for {memory}")
    return distribution(run(init, n))
