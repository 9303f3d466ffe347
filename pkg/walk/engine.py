import logging

from amplitude.state_vector import StateVector, accumulate
from walk.transitions import HADAMARD, Coin, transition_table

logger = logging.getLogger(__name__)


def step(v: StateVector, coin: Coin = HADAMARD) -> StateVector:
    """Apply one unnormalized coin flip and shift; the shared scale grows by one."""
    table = transition_table(v.memory, coin)
    out = {}
    for (k, j), (re, im) in v.entries.items():
        for br in table[j]:
            accumulate(out, (k + br.shift, br.target), br.weight * re, br.weight * im)
    return StateVector(v.memory, v.scale + 1, out)


def run(init: StateVector, n: int, coin: Coin = HADAMARD) -> StateVector:
    if n < 0:
        raise ValueError(f"steps must be non-negative, got {n}")
    v = init
    for _ in range(n):
        v = step(v, coin)
    logger.debug("ran %d steps at memory %d: %d entries", n, init.memory, len(v.entries))
    return v
