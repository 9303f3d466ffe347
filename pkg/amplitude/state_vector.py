"""Sparse walk state: (position, basis) -> Gaussian integer, one shared scale."""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple

from amplitude.dyadic import DyadicGaussian

Key = Tuple[int, int]
Gaussian = Tuple[int, int]

MEMORY_ORDERS = (0, 1, 2)


def basis_count(memory: int) -> int:
    if memory not in MEMORY_ORDERS:
        raise ValueError(f"memory order must be one of {MEMORY_ORDERS}, got {memory}")
    return 2 ** (memory + 1)


@dataclass
class StateVector:
    memory: int
    scale: int
    entries: Dict[Key, Gaussian] = field(default_factory=dict)

    def __post_init__(self):
        size = basis_count(self.memory)
        if self.scale < 0:
            raise ValueError(f"scale must be non-negative, got {self.scale}")
        cleaned = {}
        for (k, j), (re, im) in self.entries.items():
            if not 0 <= j < size:
                raise ValueError(f"basis index {j} out of range for memory order {self.memory}")
            if re or im:
                cleaned[(int(k), int(j))] = (int(re), int(im))
        self.entries = cleaned

    def positions(self) -> List[int]:
        return sorted({k for k, _ in self.entries})

    def amplitude_at(self, k: int, j: int) -> DyadicGaussian:
        re, im = self.entries.get((k, j), (0, 0))
        return DyadicGaussian(re, im, self.scale)

    def items(self) -> Iterable[Tuple[Key, Gaussian]]:
        return sorted(self.entries.items())


def accumulate(entries: Dict[Key, Gaussian], key: Key, re: int, im: int) -> None:
    """Add (re, im) into entries[key], dropping the key when the sum vanishes."""
    old_re, old_im = entries.get(key, (0, 0))
    new_re, new_im = old_re + re, old_im + im
    if new_re or new_im:
        entries[key] = (new_re, new_im)
    else:
        entries.pop(key, None)


def norm_squared(v: StateVector) -> Fraction:
    total = sum(re * re + im * im for re, im in v.entries.values())
    return Fraction(total, 1 << v.scale)


def probability_at(v: StateVector, k: int) -> Fraction:
    total = sum(
        re * re + im * im for (pos, _), (re, im) in v.entries.items() if pos == k
    )
    return Fraction(total, 1 << v.scale)
