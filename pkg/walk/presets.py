from amplitude.state_vector import StateVector

PRESETS = ("single", "symmetric")

# (position, basis) -> amplitude, plus the shared scale
_TABLE = {
    ("single", 2): ({(0, 2): (1, 0)}, 0),
    ("single", 1): ({(0, 0): (1, 0)}, 0),
    ("single", 0): ({(0, 1): (1, 0)}, 0),
    ("symmetric", 2): ({(0, j): (1, 0) if j % 2 == 0 else (0, 1) for j in range(8)}, 3),
    ("symmetric", 1): ({(0, j): (1, 0) if j % 2 == 0 else (0, 1) for j in range(4)}, 2),
    ("symmetric", 0): ({(0, 0): (1, 0), (0, 1): (0, 1)}, 1),
}


def preset_init(name: str, memory: int) -> StateVector:
    """Initial states of the comparison runs.

    single: |0,1,0,0> for two-step memory, |1,0,0> for one step, |0,1> without
    memory. symmetric: equal-weight superposition of every history at the origin
    with coin 1 carrying a factor i.
    """
    try:
        entries, scale = _TABLE[(name, memory)]
    except KeyError:
        raise ValueError(f"unknown preset {name!r} for memory order {memory}") from None
    return StateVector(memory, scale, dict(entries))
