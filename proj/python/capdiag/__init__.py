"""Cap diagrams, tallies and matching sets of weight functions."""

import json as _json

from ._capdiag import (
    apply_move,
    arc_system_count,
    cap_diagram,
    catalan,
    catalan_max_index,
    flat,
    flat_oracle,
    is_zigzag,
    legal_moves,
    matches,
    render,
    tally,
)
from . import _capdiag


def flat_report(f):
    return _json.loads(_capdiag.flat_report(list(f)))


def verify(rank, window, jobs=1, time_budget=None):
    return _json.loads(_capdiag.verify(rank, window, jobs, time_budget))


__all__ = [
    "apply_move",
    "arc_system_count",
    "cap_diagram",
    "catalan",
    "catalan_max_index",
    "flat",
    "flat_oracle",
    "flat_report",
    "is_zigzag",
    "legal_moves",
    "matches",
    "render",
    "tally",
    "verify",
]
