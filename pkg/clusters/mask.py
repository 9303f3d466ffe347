from itertools import groupby
from typing import List, NamedTuple, Tuple

from paths.sequences import parse_sequence

SINGULAR = "S"
MULTI = "M"
MARGINAL = "I"

OVERLINE = "\u0304"


class MaskSymbol(NamedTuple):
    direction: str  # "L" or "R"
    kind: str       # S, M or I

    def __str__(self):
        return self.kind + (OVERLINE if self.direction == "R" else "")


def clusters(seq: str) -> List[Tuple[str, int]]:
    """Maximal runs of equal moves as (direction, size)."""
    seq = parse_sequence(seq)
    return [(d, len(list(run))) for d, run in groupby(seq)]


def cluster_mask(seq: str) -> List[MaskSymbol]:
    runs = clusters(seq)
    last = len(runs) - 1
    mask = []
    for i, (d, size) in enumerate(runs):
        if size >= 2:
            kind = MULTI
        elif i == 0 or i == last:
            kind = MARGINAL
        else:
            kind = SINGULAR
        mask.append(MaskSymbol(d, kind))
    return mask


def format_mask(mask: List[MaskSymbol]) -> str:
    return " ".join(str(sym) for sym in mask)
