"""Closed-form amplitudes of the two-step-memory walk from |0,1,0,0>.

A part's signed count comes from its reference form. The derived evaluator
rebuilds the same count as the sum, over every cluster profile allowed by the
part's regimes and end code, of phase * sequence_count * tail fraction; it
backs the audit and the wiring finding. Amplitudes are signed counts at scale n
(value = count / sqrt(2)^n).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Tuple

from amplitude.state_vector import StateVector
from closed_form.catalog import PARTS, parts_by_basis
from closed_form.counting import sequence_count, size_options
from closed_form.parts import FormulaDefect, PartKey, PartSpec
from closed_form.reference_eval import reference_amplitude, walk_counts
from closed_form.tails import get_tail
from clusters.profile import ClusterProfile, phase_from_profile
from clusters.ranges import g_range, r_range
from walk.distribution import Distribution, distribution

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClosedAmplitude:
    signed_count: int
    scale: int

    @property
    def probability(self) -> Fraction:
        return Fraction(self.signed_count ** 2, 1 << self.scale)


def part_profiles(key: PartKey, n_left: int, n_right: int) -> Iterator[ClusterProfile]:
    """Every profile the part sums over for the given move counts."""
    extra = 1 if key.basis >= 4 else 0
    last_marginal = int(key.end[0])
    for c_left in range(1, n_left + 1):
        c_right = c_left + extra
        if c_right > n_right:
            break
        for l1, l2 in size_options(n_left, c_left, key.left):
            if l1 < last_marginal:
                continue
            # the leading R of every path is a size-one cluster
            for r1, r2 in size_options(n_right, c_right, key.right, min_singles=1):
                for g in g_range(c_left, l1, key.end):
                    for r in r_range(c_right, r1, g, key.end):
                        yield ClusterProfile(
                            n_left, n_right, c_left, c_right, l1, r1, l2, r2, g, r, key.end
                        )


def part_amplitude(part: PartSpec, n: int, k: int) -> int:
    if part.use_derived:
        return derived_amplitude(part, n, k)
    return reference_amplitude(part, n, k)


def derived_amplitude(part: PartSpec, n: int, k: int, wiring: str = "t1t2") -> int:
    counts = walk_counts(n, k)
    if counts is None:
        return 0
    tail = get_tail(part.tail)
    total = Fraction(0)
    for p in part_profiles(part.key, *counts):
        count = sequence_count(p, wiring)
        if not count:
            continue
        try:
            share = tail(p)
        except ZeroDivisionError:
            raise FormulaDefect(part.name, n, k, f"tail {part.tail} divides by zero at {p}") from None
        total += phase_from_profile(p) * count * share
    if total.denominator != 1:
        raise FormulaDefect(part.name, n, k, f"non-integer signed count {total}")
    return int(total)


def _check_steps(n: int) -> None:
    if n < 1:
        raise ValueError(f"closed-form amplitudes need n >= 1, got {n}")


def closed_amplitude(j: int, n: int, k: int, parts: Iterable[PartSpec] = PARTS) -> ClosedAmplitude:
    _check_steps(n)
    if not 0 <= j <= 7:
        raise ValueError(f"basis index must be in 0..7, got {j}")
    total = sum(part_amplitude(part, n, k) for part in parts_by_basis(tuple(parts))[j])
    return ClosedAmplitude(total, n)


def closed_state(n: int, parts: Iterable[PartSpec] = PARTS) -> StateVector:
    _check_steps(n)
    grouped = parts_by_basis(tuple(parts))
    entries = {}
    for k in range(-n, n + 1, 2):
        for j, basis_parts in grouped.items():
            total = sum(part_amplitude(part, n, k) for part in basis_parts)
            if total:
                entries[(k, j)] = (total, 0)
    logger.debug("closed form n=%d: %d nonzero amplitudes", n, len(entries))
    return StateVector(2, n, entries)


def closed_distribution(n: int, parts: Iterable[PartSpec] = PARTS) -> Distribution:
    return distribution(closed_state(n, parts))


def amplitude_parts(
    j: int, n: int, k: int, parts: Iterable[PartSpec] = PARTS
) -> Tuple[Tuple[str, Optional[int]], ...]:
    """Per-part signed counts for one amplitude; a defective part reports None."""
    out = []
    for part in parts_by_basis(tuple(parts))[j]:
        try:
            out.append((part.name, part_amplitude(part, n, k)))
        except FormulaDefect as exc:
            logger.warning("%s", exc)
            out.append((part.name, None))
    return tuple(out)
