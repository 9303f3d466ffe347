from .sequences import SequenceError, WALK_PREFIX, parse_sequence, require_walk_prefix, iterate_sequences
from .oracle import (
    OracleLimitError,
    PathOutcome,
    path_outcome,
    path_sign,
    walk_paths,
    oracle_block,
    oracle_state,
    prefix_blocks,
    signed_count,
)

__all__ = [
    "SequenceError",
    "WALK_PREFIX",
    "parse_sequence",
    "require_walk_prefix",
    "iterate_sequences",
    "OracleLimitError",
    "PathOutcome",
    "path_outcome",
    "path_sign",
    "walk_paths",
    "oracle_block",
    "oracle_state",
    "prefix_blocks",
    "signed_count",
]
