"""Search outcome types shared by the swap-puzzle and constraint-logic solvers."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Tuple


class Status(enum.Enum):
    REACHABLE = "REACHABLE"
    UNREACHABLE = "UNREACHABLE"
    LIMIT = "LIMIT"


@dataclass(frozen=True)
class SearchOptions:
    """Knobs accepted by every reachability solver.

    quotient: a ColorClassing (duck-typed: needs .class_of and .n_classes);
        when set, states are identified whenever they agree as class-valued
        maps and the answer concerns the colored pattern only.
    max_states: hard cap on stored states; hitting it yields LIMIT, never
        UNREACHABLE.
    max_seconds: optional wall-clock budget, checked between BFS levels.
    bidirectional: meet-in-the-middle search; only meaningful for
        state-to-state queries with both endpoints given.
    kernel: None picks the compiled kernel when available; "pure" or
        "compiled" forces one (used by benchmarks and parity tests).
    """

    quotient: Optional[object] = None
    max_states: int = 50_000_000
    max_seconds: Optional[float] = None
    bidirectional: bool = False
    kernel: Optional[str] = None


@dataclass(frozen=True)
class ReachabilityResult:
    status: Status
    witness: Optional[Tuple] = None
    states_explored: int = 0
    frontier_peak: int = 0

    def __post_init__(self):
        if (self.status is Status.REACHABLE) != (self.witness is not None):
            raise ValueError("witness must be present exactly when REACHABLE")


@dataclass(frozen=True)
class ComponentReport:
    """Result of exhaustively enumerating one reachable component.

    complete is False when the cap stopped the sweep; size then counts the
    states stored so far and truncated_frontier the discovered-but-unexpanded
    boundary.
    """

    complete: bool
    size: int
    truncated_frontier: int = 0
    states: Optional[frozenset] = field(default=None, repr=False)
