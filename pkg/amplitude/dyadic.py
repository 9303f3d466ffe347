"""Exact amplitudes of Hadamard walks.

Every amplitude reachable after t unnormalized coin applications is a Gaussian
integer divided by sqrt(2)**t. ``DyadicGaussian`` stores exactly that triple and
compares by value, so (1, 0, 0) and (2, 0, 2) are the same number.
"""
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, eq=False)
class DyadicGaussian:
    re: int
    im: int
    scale: int = 0

    def __post_init__(self):
        if self.scale < 0:
            raise ValueError(f"scale must be non-negative, got {self.scale}")

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def rescaled(self, scale: int) -> "DyadicGaussian":
        """Write the same value at a larger scale of the same parity."""
        diff = scale - self.scale
        if diff < 0 or diff % 2:
            raise ValueError(f"cannot rescale from {self.scale} to {scale}")
        factor = 1 << (diff // 2)
        return DyadicGaussian(self.re * factor, self.im * factor, scale)

    def canonical(self) -> "DyadicGaussian":
        if self.is_zero():
            return DyadicGaussian(0, 0, 0)
        re, im, scale = self.re, self.im, self.scale
        while scale >= 2 and re % 2 == 0 and im % 2 == 0:
            re //= 2
            im //= 2
            scale -= 2
        return DyadicGaussian(re, im, scale)

    def abs2(self) -> Fraction:
        return Fraction(self.re * self.re + self.im * self.im, 1 << self.scale)

    def __eq__(self, other):
        if not isinstance(other, DyadicGaussian):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return (a.re, a.im, a.scale) == (b.re, b.im, b.scale)

    def __hash__(self):
        c = self.canonical()
        return hash((c.re, c.im, c.scale))

    def __add__(self, other: "DyadicGaussian") -> "DyadicGaussian":
        return add_scaled(self, other)

    def __neg__(self) -> "DyadicGaussian":
        return DyadicGaussian(-self.re, -self.im, self.scale)

    def __sub__(self, other: "DyadicGaussian") -> "DyadicGaussian":
        return add_scaled(self, -other)

    def __mul__(self, other: "DyadicGaussian") -> "DyadicGaussian":
        return DyadicGaussian(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
            self.scale + other.scale,
        )

    def __repr__(self):
        return f"DyadicGaussian({self.re}, {self.im}, scale={self.scale})"


ZERO = DyadicGaussian(0, 0, 0)
ONE = DyadicGaussian(1, 0, 0)


def add_scaled(a: DyadicGaussian, b: DyadicGaussian) -> DyadicGaussian:
    """Exact sum at scale max(a.scale, b.scale).

    Scales of different parity have no common form with integer parts
    (1 + 1/sqrt(2) is not a Gaussian integer over any power of sqrt(2)), so that
    case is rejected.
    """
    if (a.scale - b.scale) % 2:
        raise ValueError(
            f"cannot add amplitudes at scales {a.scale} and {b.scale} of different parity"
        )
    scale = max(a.scale, b.scale)
    a, b = a.rescaled(scale), b.rescaled(scale)
    return DyadicGaussian(a.re + b.re, a.im + b.im, scale)
