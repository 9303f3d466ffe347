from itertools import product
from typing import Iterator

WALK_PREFIX = "RL"


class SequenceError(ValueError):
    pass


def parse_sequence(text: str) -> str:
    """Normalize direction text (case, surrounding blanks, separators)."""
    cleaned = "".join(ch for ch in text.strip().upper() if ch not in " ,_-")
    if not cleaned:
        raise SequenceError("direction sequence is empty")
    bad = sorted({ch for ch in cleaned if ch not in "LR"})
    if bad:
        raise SequenceError(f"direction sequence may only contain L and R, found {''.join(bad)!r}")
    return cleaned


def require_walk_prefix(seq: str, min_length: int = 3) -> str:
    seq = parse_sequence(seq)
    if not seq.startswith(WALK_PREFIX):
        raise SequenceError(f"walk paths start with {WALK_PREFIX}, got {seq[:2]!r}")
    if len(seq) < min_length:
        raise SequenceError(f"walk paths need at least {min_length} moves, got {len(seq)}")
    return seq


def iterate_sequences(n: int, prefix: str = "") -> Iterator[str]:
    """All RL-prefixed paths with n continuation moves, lexicographic (L < R)."""
    if len(prefix) > n:
        raise ValueError(f"prefix {prefix!r} is longer than {n} moves")
    for tail in product("LR", repeat=n - len(prefix)):
        yield WALK_PREFIX + prefix + "".join(tail)
