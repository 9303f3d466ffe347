"""One-step branch tables: coin flip, then direction choice, then shift."""
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

from amplitude.state_vector import basis_count
from walk.basis import LEFT, RIGHT, history_of, index_of


@dataclass(frozen=True)
class Coin:
    """2x2 integer coin weights; row is the new coin value, column the old one."""
    a: int = 1
    b: int = 1
    c: int = 1
    d: int = -1

    def weight(self, new: int, old: int) -> int:
        return ((self.a, self.b), (self.c, self.d))[new][old]


HADAMARD = Coin()


@dataclass(frozen=True)
class Branch:
    target: int
    shift: int
    weight: int


TransitionRule = Dict[int, Tuple[Branch, Branch]]


def next_direction(moves: Tuple[int, ...], new_coin: int) -> int:
    """Direction chosen by the flipped coin.

    Two-step memory: coin 1 repeats the move made two steps ago, coin 0 takes the
    opposite one (this is the consistent/opposite trend rule written on moves).
    One-step memory: coin 1 repeats the last move, coin 0 reverses it.
    No memory: coin 0 goes left, coin 1 goes right.
    """
    if not moves:
        return RIGHT if new_coin else LEFT
    anchor = moves[0]
    return anchor if new_coin else -anchor


@lru_cache(maxsize=None)
def transition_table(memory: int, coin: Coin = HADAMARD) -> TransitionRule:
    table = {}
    for j in range(basis_count(memory)):
        moves, p = history_of(j, memory)
        branches = []
        for new_coin in (0, 1):
            direction = next_direction(moves, new_coin)
            history = (moves + (direction,))[1:] if moves else ()
            branches.append(Branch(index_of(history, new_coin), direction, coin.weight(new_coin, p)))
        table[j] = tuple(branches)
    return table


def check_unitary(memory: int, coin: Coin = HADAMARD) -> bool:
    """True when the induced operator has orthogonal columns of squared norm 2."""
    table = transition_table(memory, coin)
    size = basis_count(memory)
    columns = {}
    for k in range(-2, 3):
        for j in range(size):
            columns[(k, j)] = {(k + br.shift, br.target): br.weight for br in table[j]}
    for (k, j), column in columns.items():
        if k != 0:
            continue
        for other_key, other in columns.items():
            dot = sum(w * other.get(key, 0) for key, w in column.items())
            expected = 2 if other_key == (k, j) else 0
            if dot != expected:
                return False
    return True
