"""Cross-checks of the closed form against the simulator and the path oracle."""
import logging
from collections import defaultdict
from typing import Dict, Iterable, List, Optional, Tuple

from closed_form.catalog import PARTS, parts_by_basis
from closed_form.counting import WIRINGS
from closed_form.evaluate import closed_state, derived_amplitude, part_amplitude
from closed_form.parts import FormulaDefect, PartKey, PartSpec, Regime
from closed_form.reference_eval import reference_amplitude
from clusters.profile import ClusterProfile, profile, size_regime
from paths.oracle import (
    DEFAULT_MAX_STEPS,
    OracleLimitError,
    PathOutcome,
    oracle_state,
    path_outcome,
    prefix_blocks,
    walk_paths,
)
from walk.engine import run
from walk.presets import preset_init
from walk_app.schemas_output import Deviation, DeviationsReport, Mismatch, VerifyReport, WiringFinding

logger = logging.getLogger(__name__)

PartCounts = Dict[Tuple[int, PartKey], int]


def key_from_profile(p: ClusterProfile, basis: int) -> PartKey:
    end = "011" if basis >= 6 else p.end
    left = size_regime(p.left_clusters, p.left_singles, p.left_pairs)
    right = size_regime(p.right_clusters, p.right_singles, p.right_pairs)
    return PartKey(basis, end, Regime(left), Regime(right))


def part_key_of(seq: str, outcome: Optional[PathOutcome] = None) -> PartKey:
    """The catalog part a concrete path is counted in."""
    outcome = outcome or path_outcome(seq)
    return key_from_profile(profile(seq), outcome.basis)


def oracle_part_counts(n: int, max_steps: int = DEFAULT_MAX_STEPS) -> PartCounts:
    """Signed path sums keyed by (final position, part key)."""
    if n > max_steps:
        raise OracleLimitError(f"path enumeration for n={n} exceeds the limit of {max_steps} steps")
    counts: PartCounts = defaultdict(int)
    for seq, outcome in walk_paths(n):
        counts[(outcome.position, part_key_of(seq, outcome))] += outcome.sign
    return dict(counts)


def _value_or_none(evaluate, *args) -> Optional[int]:
    try:
        return evaluate(*args)
    except FormulaDefect:
        return None


def _deviation(part: PartSpec, n: int, k: int, reference, oracle: int, defect=None) -> Deviation:
    form = part.written_form
    return Deviation(
        part=part.name,
        n=n,
        k=k,
        reference=reference,
        oracle=oracle,
        corrected=_value_or_none(part_amplitude, part, n, k),
        derived=_value_or_none(derived_amplitude, part, n, k),
        defect=defect,
        corrections=[str(c) for c in part.corrections],
        variables=[f"{name} in [{low}, {high}]" for name, low, high in form.variables],
        sign=form.sign,
        factors=list(form.factors),
        rho=form.rho,
        note=form.note,
    )


def _wiring_matches(wiring: str, limit: int, parts, oracle_states) -> Optional[str]:
    """First (n, k, j) where the catalog under this wiring leaves the oracle."""
    grouped = parts_by_basis(parts)
    for n in range(1, limit + 1):
        entries = oracle_states[n].entries
        for k in range(-n, n + 1, 2):
            for j, basis_parts in grouped.items():
                try:
                    total = sum(derived_amplitude(p, n, k, wiring) for p in basis_parts)
                except FormulaDefect as exc:
                    return str(exc)
                expected = entries.get((k, j), (0, 0))[0]
                if total != expected:
                    return f"n={n}, k={k}, j={j}: {total} != {expected}"
    return None


def audit(limit: int, parts: Iterable[PartSpec] = PARTS, max_steps: int = DEFAULT_MAX_STEPS) -> DeviationsReport:
    """Check every part as written against the oracle for n = 1..limit.

    A deviation carries the written value next to the shipped (corrected) one
    and the derived one. The wiring finding is computed with the derived
    evaluator, since reference forms fix the wiring in their bounds.
    """
    parts = tuple(parts)
    if limit > max_steps:
        raise OracleLimitError(f"audit limit {limit} exceeds the oracle limit of {max_steps} steps")
    per_part = {n: oracle_part_counts(n, max_steps) for n in range(1, limit + 1)}
    deviations: List[Deviation] = []

    for part in parts:
        found = None
        for n in range(1, limit + 1):
            for k in range(-n, n + 1, 2):
                oracle = per_part[n].get((k, part.key), 0)
                try:
                    reference = reference_amplitude(part, n, k, part.written_form)
                except FormulaDefect as exc:
                    found = _deviation(part, n, k, None, oracle, exc.reason)
                    break
                if reference != oracle:
                    found = _deviation(part, n, k, reference, oracle)
                    break
            if found:
                break
        if found:
            logger.warning("written form of %s deviates first at n=%d, k=%d", part.name, found.n, found.k)
            deviations.append(found)

    states = {n: oracle_state(n, max_steps) for n in range(1, limit + 1)}
    finding = WiringFinding()
    for wiring in WIRINGS:
        first = _wiring_matches(wiring, limit, parts, states)
        finding.matches[wiring] = first is None
        if first is not None:
            finding.first_mismatch[wiring] = first
            logger.warning("slot wiring %s leaves the oracle at %s", wiring, first)

    return DeviationsReport(limit=limit, parts_checked=len(parts), deviations=deviations, wiring=finding)


def failing_parts(n: int, k: int, j: int, parts: Iterable[PartSpec] = PARTS, max_steps: int = DEFAULT_MAX_STEPS) -> List[str]:
    """Parts of basis j whose signed count at (n, k) differs from the oracle's share."""
    counts = oracle_part_counts(n, max_steps)
    bad = []
    for part in parts_by_basis(tuple(parts))[j]:
        try:
            value = part_amplitude(part, n, k)
        except FormulaDefect:
            bad.append(part.name)
            continue
        if value != counts.get((k, part.key), 0):
            bad.append(part.name)
    return bad


def _fmt(entry: Tuple[int, int], scale: int) -> str:
    re, im = entry
    value = f"{re}" if not im else f"{re}{im:+d}i"
    return f"{value}/sqrt2^{scale}"


def verify(limit: int, parts: Iterable[PartSpec] = PARTS, max_steps: int = DEFAULT_MAX_STEPS, workers: int = 1) -> VerifyReport:
    """Simulator, path oracle and closed form agree on the full state for n = 1..limit."""
    parts = tuple(parts)
    if limit > max_steps:
        raise OracleLimitError(f"verify limit {limit} exceeds the oracle limit of {max_steps} steps")
    report = VerifyReport(limit=limit, passed=True)
    init = preset_init("single", 2)
    depth = max(1, (workers - 1).bit_length()) if workers > 1 else 0

    for n in range(1, limit + 1):
        sim = run(init, n)
        blocks = prefix_blocks(n, depth)
        orc = oracle_state(n, max_steps, blocks=blocks, workers=workers)
        try:
            closed = closed_state(n, parts)
        except FormulaDefect as exc:
            logger.warning("%s", exc)
            report.passed = False
            report.defects.append(str(exc))
            return report
        keys = sorted(set(sim.entries) | set(orc.entries) | set(closed.entries))
        for k, j in keys:
            a, b, c = (v.entries.get((k, j), (0, 0)) for v in (sim, orc, closed))
            if a == b == c:
                continue
            report.passed = False
            report.mismatch = Mismatch(
                n=n,
                k=k,
                j=j,
                simulator=_fmt(a, n),
                oracle=_fmt(b, n),
                closed_form=_fmt(c, n),
                parts=failing_parts(n, k, j, parts, max_steps) if b != c else [],
            )
            logger.warning("mismatch at n=%d, k=%d, j=%d: %s", n, k, j, report.mismatch)
            return report
        report.steps_checked.append(n)
        logger.info("n=%d: simulator, oracle and closed form agree", n)
    return report
