from dataclasses import replace
from fractions import Fraction

import pytest

from closed_form.crosscheck import audit, failing_parts, oracle_part_counts, part_key_of, verify
from closed_form.catalog import PARTS, find_part, parts_by_basis, replace_part
from closed_form.evaluate import (
    amplitude_parts,
    closed_amplitude,
    closed_distribution,
    closed_state,
    derived_amplitude,
    part_amplitude,
)
from closed_form.parts import Correction, FormulaDefect, PartKey, Regime
from closed_form.reference_eval import walk_counts
from closed_form.tails import get_tail
from paths.oracle import OracleLimitError, oracle_state


def test_catalog_shape():
    assert len(PARTS) == 58
    sizes = {j: len(parts) for j, parts in parts_by_basis().items()}
    assert sizes == {0: 6, 1: 3, 2: 10, 3: 15, 4: 6, 5: 9, 6: 6, 7: 3}
    assert len({p.key for p in PARTS}) == len(PARTS)


def test_part_key_round_trip():
    key = PartKey(3, "110", Regime.PAIRS, Regime.MIXED)
    assert str(key) == "j3/110/pairs-mixed"
    assert PartKey.parse(str(key)) == key
    with pytest.raises(ValueError):
        PartKey.parse("j3/110")
    with pytest.raises(ValueError):
        PartKey(8, "110", Regime.SINGLE, Regime.SINGLE)


def test_unknown_tail():
    with pytest.raises(ValueError):
        get_tail("everything")


def test_walk_counts():
    assert walk_counts(1, 1) == (1, 2)
    assert walk_counts(4, 2) == (2, 4)
    assert walk_counts(4, 1) is None
    assert walk_counts(3, 5) is None


def test_closed_amplitude_examples():
    assert closed_amplitude(0, 5, -1).signed_count == 0
    five = closed_amplitude(5, 5, 1)
    assert (five.signed_count, five.scale) == (2, 5)
    assert five.probability == Fraction(4, 32)
    assert closed_amplitude(5, 1, 1).signed_count == 1


def test_closed_amplitude_zero_off_support():
    assert closed_amplitude(3, 6, 1).signed_count == 0
    assert closed_amplitude(3, 3, 7).signed_count == 0


def test_closed_amplitude_rejects():
    with pytest.raises(ValueError):
        closed_amplitude(8, 3, 1)
    with pytest.raises(ValueError):
        closed_state(0)


def test_closed_distribution_examples():
    assert closed_distribution(1).probabilities == {-1: Fraction(1, 2), 1: Fraction(1, 2)}
    assert closed_distribution(2).probabilities == {-2: Fraction(1, 4), 0: Fraction(1, 2), 2: Fraction(1, 4)}


@pytest.mark.parametrize("n", range(1, 17))
def test_closed_form_equals_oracle(n):
    assert closed_state(n).entries == oracle_state(n).entries


def test_amplitude_parts_sum_to_amplitude():
    named = amplitude_parts(5, 5, 1)
    assert sum(v for _, v in named) == 2
    assert [name for name, _ in named] == [p.name for p in parts_by_basis()[5]]


def test_parts_match_oracle_share():
    counts = oracle_part_counts(9)
    for part in PARTS:
        for k in range(-9, 10, 2):
            assert part_amplitude(part, 9, k) == counts.get((k, part.key), 0), (part.name, k)


def test_part_key_of_path():
    assert str(part_key_of("RLR")) == "j5/010/single-single"
    assert part_key_of("RLRR").basis == 6
    assert part_key_of("RLRR").end == "011"


CORRECTED = {
    "j0/001/pairs-mixed",
    "j2/110/mixed-mixed",
    "j3/101/mixed-pairs",
    "j4/001/mixed-mixed",
    "j5/010/mixed-single",
}


def _flipped(name):
    part = find_part(name)
    return part.with_reference(replace(part.reference, sign="1"))


def test_wrong_reference_is_caught_and_named():
    broken = replace_part(PARTS, _flipped("j5/010/single-single"))
    report = verify(3, parts=broken)
    assert not report.passed
    assert report.mismatch is not None
    assert (report.mismatch.n, report.mismatch.k, report.mismatch.j) == (1, 1, 5)
    assert report.mismatch.parts == ["j5/010/single-single"]
    assert failing_parts(1, 1, 5, broken) == ["j5/010/single-single"]


def test_defective_part_is_reported():
    part = find_part("j5/010/single-single")
    broken = replace_part(PARTS, part.with_reference(replace(part.reference, rho="frac(1, nl - nl)")))
    report = verify(2, parts=broken)
    assert not report.passed
    assert any("j5/010/single-single" in d for d in report.defects)
    with pytest.raises(FormulaDefect):
        closed_amplitude(5, 1, 1, parts=broken)


def test_derived_catalog_passes_verify():
    assert verify(10, parts=tuple(p.derived() for p in PARTS)).passed


def test_wrong_tail_in_derived_evaluator():
    part = find_part("j5/010/single-single")
    broken = replace_part(PARTS, part.with_tail("negative_multi").derived())
    report = verify(3, parts=broken)
    assert not report.passed
    assert (report.mismatch.n, report.mismatch.k, report.mismatch.j) == (1, 1, 5)
    assert report.mismatch.parts == ["j5/010/single-single"]
    with pytest.raises(FormulaDefect):
        derived_amplitude(part.with_tail("positive_single"), 1, 1)


def test_derived_evaluator_agrees_per_part():
    for part in PARTS:
        for k in range(-8, 9, 2):
            assert part_amplitude(part, 8, k) == derived_amplitude(part, 8, k), (part.name, k)


def test_corrections_keep_the_written_form():
    corrected = {p.name for p in PARTS if p.corrections}
    assert corrected == CORRECTED
    for part in PARTS:
        if part.corrections:
            assert part.written is not None and part.written != part.reference
            for c in part.corrections:
                assert c.written != c.shipped
        else:
            assert part.written is None and part.written_form is part.reference


def test_j5_lower_bound_correction():
    part = find_part("j5/010/mixed-single")
    assert part.written.variables[0] == ("cl1", "max(1, 2*nr - nl + 1)", "nr - 2")
    assert part.reference.variables[0] == ("cl1", "max(1, 2*nr - nl - 1)", "nr - 2")
    counts = oracle_part_counts(5)
    assert part_amplitude(part, 5, -1) == counts.get((-1, part.key), 0)


def test_substitute_requires_the_expression():
    part = find_part("j5/010/single-single")
    with pytest.raises(ValueError):
        part.corrected(Correction("delta(nl, nr)", "delta(nl, nr - 1)"))


def test_find_part_unknown_key():
    with pytest.raises(KeyError):
        find_part("j0/110/single-single")


def test_verify_passes():
    report = verify(12)
    assert report.passed
    assert report.steps_checked == list(range(1, 13))
    assert report.mismatch is None and not report.defects


def test_verify_with_workers():
    assert verify(8, workers=3).passed


def test_verify_respects_oracle_limit():
    with pytest.raises(OracleLimitError):
        verify(10, max_steps=8)


def test_audit_lists_the_corrected_parts():
    report = audit(12)
    assert report.parts_checked == 58
    assert report.wiring.matches["t1t2"]
    assert {d.part for d in report.deviations} == CORRECTED
    for dev in report.deviations:
        assert dev.corrected == dev.oracle == dev.derived, dev.part
        assert dev.reference != dev.oracle or dev.defect
        assert dev.corrections
