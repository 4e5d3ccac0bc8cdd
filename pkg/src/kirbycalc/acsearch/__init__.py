from .core import (BoundsError, SearchConfig, SearchOutcome, SearchStats,
                   TraceError, apply_move, canonical_key, is_trivial_form,
                   replay_trace, search, TRIVIALIZED, EXHAUSTED, BUDGET)
from .kernel import IMPL_NAME as KERNEL_IMPL

__all__ = [
    "BoundsError", "SearchConfig", "SearchOutcome", "SearchStats",
    "TraceError", "apply_move", "canonical_key", "is_trivial_form",
    "replay_trace", "search", "TRIVIALIZED", "EXHAUSTED", "BUDGET",
    "KERNEL_IMPL",
]
