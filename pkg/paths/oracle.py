"""Exhaustive path enumeration for the two-step-memory walk from |0,1,0,0>.

Every continuation of the fixed RL prefix is a feasible path; its sign is the
product of the branch weights it takes, so summing signs per final (k, j) gives
the unnormalized amplitude at scale n.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from amplitude.state_vector import Gaussian, Key, StateVector, accumulate
from paths.sequences import WALK_PREFIX, require_walk_prefix
from walk.basis import LEFT, RIGHT
from walk.transitions import transition_table

logger = logging.getLogger(__name__)

START_BASIS = 2
DEFAULT_MAX_STEPS = 24


class OracleLimitError(ValueError):
    pass


@dataclass(frozen=True)
class PathOutcome:
    basis: int
    position: int
    sign: int


@lru_cache(maxsize=None)
def _branch_by_direction():
    table = transition_table(2)
    return {j: {br.shift: br for br in branches} for j, branches in table.items()}


def _follow(moves: str, basis: int = START_BASIS, position: int = 0, sign: int = 1) -> PathOutcome:
    branches = _branch_by_direction()
    for ch in moves:
        br = branches[basis][RIGHT if ch == "R" else LEFT]
        basis = br.target
        position += br.shift
        sign *= br.weight
    return PathOutcome(basis, position, sign)


def path_outcome(s: str) -> PathOutcome:
    s = require_walk_prefix(s)
    return _follow(s[len(WALK_PREFIX):])


def path_sign(s: str) -> int:
    return path_outcome(s).sign


def walk_paths(n: int, prefix: str = "") -> Iterator[Tuple[str, PathOutcome]]:
    """Yield (full sequence, outcome) for every continuation, lexicographic."""
    branches = _branch_by_direction()
    start = _follow(prefix)

    def descend(moves, basis, position, sign, depth):
        if depth == 0:
            yield WALK_PREFIX + moves, PathOutcome(basis, position, sign)
            return
        for ch, d in (("L", LEFT), ("R", RIGHT)):
            br = branches[basis][d]
            yield from descend(moves + ch, br.target, position + d, sign * br.weight, depth - 1)

    yield from descend(prefix, start.basis, start.position, start.sign, n - len(prefix))


def oracle_block(n: int, prefix: str = "") -> Dict[Key, Gaussian]:
    """Signed sums over the continuations that start with prefix."""
    if len(prefix) > n:
        raise ValueError(f"prefix {prefix!r} is longer than {n} moves")
    branches = _branch_by_direction()
    start = _follow(prefix)
    counts: Dict[Key, int] = {}

    def descend(basis, position, sign, depth):
        if depth == 0:
            key = (position, basis)
            counts[key] = counts.get(key, 0) + sign
            return
        for d in (LEFT, RIGHT):
            br = branches[basis][d]
            descend(br.target, position + d, sign * br.weight, depth - 1)

    descend(start.basis, start.position, start.sign, n - len(prefix))
    return {key: (c, 0) for key, c in counts.items() if c}


def prefix_blocks(n: int, depth: int) -> List[str]:
    depth = max(0, min(depth, n))
    return ["".join(p) for p in product("LR", repeat=depth)]


def _check_partition(n: int, blocks: List[str]) -> None:
    ordered = sorted(blocks)
    for a, b in zip(ordered, ordered[1:]):
        if b.startswith(a):
            raise ValueError(f"prefix blocks {a!r} and {b!r} overlap")
    covered = sum(2 ** (n - len(b)) for b in blocks)
    if covered != 2 ** n:
        raise ValueError(f"prefix blocks cover {covered} of {2 ** n} paths")


def oracle_state(
    n: int,
    max_steps: int = DEFAULT_MAX_STEPS,
    blocks: Optional[Iterable[str]] = None,
    workers: int = 1,
) -> StateVector:
    if n < 0:
        raise ValueError(f"steps must be non-negative, got {n}")
    if n > max_steps:
        raise OracleLimitError(f"path enumeration for n={n} exceeds the limit of {max_steps} steps")
    blocks = [""] if blocks is None else list(blocks)
    _check_partition(n, blocks)

    if workers > 1 and len(blocks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(oracle_block, [n] * len(blocks), blocks))
    else:
        parts = [oracle_block(n, b) for b in blocks]

    merged: Dict[Key, Gaussian] = {}
    for part in parts:
        for key, (re, im) in part.items():
            accumulate(merged, key, re, im)
    logger.debug("oracle n=%d over %d blocks: %d entries", n, len(blocks), len(merged))
    return StateVector(2, n, merged)


@lru_cache(maxsize=32)
def _cached_entries(n: int, max_steps: int) -> Dict[Key, Gaussian]:
    return oracle_state(n, max_steps).entries


def signed_count(n: int, k: int, j: int, max_steps: int = DEFAULT_MAX_STEPS) -> int:
    return _cached_entries(n, max_steps).get((k, j), (0, 0))[0]
