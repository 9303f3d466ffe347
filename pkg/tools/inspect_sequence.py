"""Print the cluster profile of one path and the closed-form parts of the amplitude it ends in.

    python tools/inspect_sequence.py RLRRLLRL
"""
import sys
from pathlib import Path
# Ensure project root is on sys.path
sys.path.append(str(Path(__file__).resolve().parents[1]))

from closed_form.evaluate import amplitude_parts, derived_amplitude
from closed_form.reference_eval import reference_amplitude
from closed_form.catalog import find_part
from closed_form.parts import FormulaDefect
from paths.oracle import path_outcome, signed_count
from paths.sequences import WALK_PREFIX, parse_sequence
from walk_app.main import profile_lines

# Default: the long example path from the walk tests
seq = parse_sequence(sys.argv[1] if len(sys.argv) > 1 else "RLRRLLLRRLRLRRRLLLLR")
print('Sequence', seq)
for line in profile_lines(seq):
    print(line)

# RL alone has taken no step yet
if not seq.startswith(WALK_PREFIX) or len(seq) <= len(WALK_PREFIX):
    print('\nNot a walk path with steps; no amplitude to break down')
    raise SystemExit(0)

out = path_outcome(seq)
n = len(seq) - len(WALK_PREFIX)
print(f'\nAmplitude (n={n}, k={out.position}, j={out.basis}), signed counts at scale n:')
total = 0
# One line per closed-form part that contributes to this (n, k, j)
for name, value in amplitude_parts(out.basis, n, out.position):
    part = find_part(name)
    # written form differs from the shipped one only for corrected parts
    try:
        written = reference_amplitude(part, n, out.position, part.written_form)
    except FormulaDefect as e:
        written = f'defect ({e.reason})'
    derived = derived_amplitude(part, n, out.position)
    print(f'  {name:<24} shipped={value}  written={written}  derived={derived}')
    for c in part.corrections:
        print(f'      corrected: {c}')
    total += value or 0
# Both totals are signed path counts, so they must agree exactly
print('closed form total:', total)
print('path oracle      :', signed_count(n, out.position, out.basis))

print('\nDone')
