"""Basis index <-> position-history encodings.

Memory order 2 uses j = 2*n1 - n2 - n3 + p + 3, which lays the eight states out
as 4*[last move is R] + 2*[previous move is R] + p. Orders 1 and 0 keep the same
ordering with the missing history bits dropped: j = 2*[last move is R] + p and
j = p.
"""
from dataclasses import dataclass
from typing import Optional, Tuple

from amplitude.state_vector import basis_count

LEFT = -1
RIGHT = 1


@dataclass(frozen=True)
class OriginalState:
    n1: int
    p: int
    n2: Optional[int] = None
    n3: Optional[int] = None

    @property
    def memory(self) -> int:
        if self.n2 is None:
            return 0
        return 1 if self.n3 is None else 2


def _check_move(a: int, b: int, label: str) -> int:
    step = b - a
    if step not in (LEFT, RIGHT):
        raise ValueError(f"|{label}| must be 1, got positions {a} -> {b}")
    return step


def encode_basis(s: OriginalState) -> int:
    if s.p not in (0, 1):
        raise ValueError(f"coin state must be 0 or 1, got {s.p}")
    if s.n3 is not None and s.n2 is None:
        raise ValueError("n3 given without n2")
    if s.memory == 2:
        _check_move(s.n3, s.n2, "n3-n2")
        _check_move(s.n2, s.n1, "n2-n1")
        return 2 * s.n1 - s.n2 - s.n3 + s.p + 3
    if s.memory == 1:
        last = _check_move(s.n2, s.n1, "n2-n1")
        return 2 * (last == RIGHT) + s.p
    return s.p


def history_of(j: int, memory: int) -> Tuple[Tuple[int, ...], int]:
    """Split a basis index into (moves oldest first, coin)."""
    if not 0 <= j < basis_count(memory):
        raise ValueError(f"basis index {j} out of range for memory order {memory}")
    p = j & 1
    if memory == 2:
        previous = RIGHT if j & 2 else LEFT
        last = RIGHT if j & 4 else LEFT
        return (previous, last), p
    if memory == 1:
        return (RIGHT if j & 2 else LEFT,), p
    return (), p


def index_of(moves: Tuple[int, ...], p: int) -> int:
    if len(moves) == 2:
        previous, last = moves
        return 4 * (last == RIGHT) + 2 * (previous == RIGHT) + p
    if len(moves) == 1:
        return 2 * (moves[0] == RIGHT) + p
    return p


def decode_basis(j: int, k: int, memory: int = 2) -> OriginalState:
    moves, p = history_of(j, memory)
    if memory == 2:
        previous, last = moves
        n2 = k - last
        return OriginalState(n1=k, p=p, n2=n2, n3=n2 - previous)
    if memory == 1:
        return OriginalState(n1=k, p=p, n2=k - moves[0])
    return OriginalState(n1=k, p=p)
