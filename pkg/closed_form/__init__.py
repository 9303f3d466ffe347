from .parts import Correction, FormulaDefect, PartKey, PartSpec, ReferenceForm, Regime
from .catalog import PARTS, find_part, parts_by_basis, replace_part
from .counting import WIRINGS, sequence_count
from .evaluate import (
    ClosedAmplitude,
    amplitude_parts,
    closed_amplitude,
    closed_distribution,
    closed_state,
    derived_amplitude,
    part_amplitude,
)
from .reference_eval import reference_amplitude, walk_counts
from .crosscheck import audit, failing_parts, oracle_part_counts, part_key_of, verify

__all__ = [
    "Correction",
    "FormulaDefect",
    "PartKey",
    "PartSpec",
    "ReferenceForm",
    "Regime",
    "PARTS",
    "find_part",
    "parts_by_basis",
    "replace_part",
    "WIRINGS",
    "sequence_count",
    "ClosedAmplitude",
    "amplitude_parts",
    "closed_amplitude",
    "closed_distribution",
    "closed_state",
    "derived_amplitude",
    "part_amplitude",
    "reference_amplitude",
    "walk_counts",
    "audit",
    "failing_parts",
    "oracle_part_counts",
    "part_key_of",
    "verify",
]
