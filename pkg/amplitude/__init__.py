from .dyadic import DyadicGaussian, add_scaled, ZERO, ONE
from .state_vector import (
    StateVector,
    accumulate,
    basis_count,
    norm_squared,
    probability_at,
)

__all__ = [
    "DyadicGaussian",
    "add_scaled",
    "ZERO",
    "ONE",
    "StateVector",
    "accumulate",
    "basis_count",
    "norm_squared",
    "probability_at",
]
