from .basis import OriginalState, encode_basis, decode_basis, LEFT, RIGHT
from .transitions import Coin, HADAMARD, Branch, transition_table, check_unitary
from .engine import step, run
from .presets import preset_init, PRESETS
from .init_file import load_init_file, InitStateError
from .distribution import Distribution, distribution, moments, simulate_distribution
from .peaks import local_maxima, is_symmetric
from .reference import reference_run

__all__ = [
    "OriginalState",
    "encode_basis",
    "decode_basis",
    "LEFT",
    "RIGHT",
    "Coin",
    "HADAMARD",
    "Branch",
    "transition_table",
    "check_unitary",
    "step",
    "run",
    "preset_init",
    "PRESETS",
    "load_init_file",
    "InitStateError",
    "Distribution",
    "distribution",
    "moments",
    "simulate_distribution",
    "local_maxima",
    "is_symmetric",
    "reference_run",
]
