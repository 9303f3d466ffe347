import json
from pathlib import Path
from typing import Optional

from pydantic import ValidationError

from amplitude.state_vector import StateVector, norm_squared
from walk.basis import OriginalState, encode_basis
from walk_app.schemas_input import InitStateFile


class InitStateError(ValueError):
    pass


def state_from_records(data: InitStateFile) -> StateVector:
    entries = {}
    for idx, rec in enumerate(data.records, start=1):
        if data.memory >= 1 and rec.n2 is None:
            raise InitStateError(f"record {idx}: n2 is required for memory order {data.memory}")
        if data.memory == 2 and rec.n3 is None:
            raise InitStateError(f"record {idx}: n3 is required for memory order 2")
        state = OriginalState(
            n1=rec.n1,
            p=rec.p,
            n2=rec.n2 if data.memory >= 1 else None,
            n3=rec.n3 if data.memory == 2 else None,
        )
        try:
            j = encode_basis(state)
        except ValueError as e:
            raise InitStateError(f"record {idx}: {e}") from None
        key = (rec.n1, j)
        if key in entries:
            raise InitStateError(f"record {idx}: duplicate basis state at position {rec.n1}, index {j}")
        entries[key] = (rec.re, rec.im)
    v = StateVector(data.memory, data.scale, entries)
    norm = norm_squared(v)
    if norm != 1:
        raise InitStateError(f"initial state must have norm 1, got {norm}")
    return v


def load_init_file(path, memory: Optional[int] = None) -> StateVector:
    """Read and validate a custom initial state (JSON)."""
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as e:
        raise InitStateError(f"cannot read init file {path}: {e}") from None
    except json.JSONDecodeError as e:
        raise InitStateError(f"init file {path} is not valid JSON: {e}") from None
    try:
        data = InitStateFile.model_validate(raw)
    except ValidationError as e:
        raise InitStateError(f"invalid init file {path}:\n{e}") from None
    if memory is not None and data.memory != memory:
        raise InitStateError(f"init file is for memory order {data.memory}, run asked for {memory}")
    return state_from_records(data)
