"""Nondeterministic constraint logic: graphs, orientations, and flip search.

A constraint graph is 3-regular with edge weights 1 (red) or 2 (blue) and
two vertex kinds: OR vertices carry three weight-2 edges, AND vertices one
weight-2 and two weight-1 edges. An orientation names a head per edge and is
valid when every vertex's incoming weight totals at least 2. A flip reverses
one edge while keeping validity; reachability is asked over the graph of all
valid orientations joined by flips.

Parallel edges are allowed (small 3-regular instances need them); loops are
rejected because a vertex's three incident edge slots must be distinct.

Orientation encoding: one value per edge, 0 meaning the head is the edge's
first endpoint and 1 the second.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import InputError
from .result import ReachabilityResult, SearchOptions, Status

EXHAUSTIVE_EDGE_CAP = 30


class VertexKind(enum.Enum):
    AND = "AND"
    OR = "OR"


Orientation = Tuple[int, ...]

AND_WEIGHTS = (1, 1, 2)
OR_WEIGHTS = (2, 2, 2)


@dataclass(frozen=True)
class NclGraph:
    """3-regular AND/OR constraint graph; edges are (u, v, weight) triples."""

    kinds: Tuple[VertexKind, ...]
    edges: Tuple[Tuple[int, int, int], ...]
    _incidence: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False,
                                                    compare=False)

    def __post_init__(self):
        n = len(self.kinds)
        object.__setattr__(self, "kinds", tuple(self.kinds))
        object.__setattr__(self, "edges",
                           tuple(tuple(e) for e in self.edges))
        incidence: List[List[int]] = [[] for _ in range(n)]
        for i, (u, v, w) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {i} endpoint out of range")
            if u == v:
                raise InputError(f"edge {i} is a loop; loops are not allowed")
            if w not in (1, 2):
                raise InputError(f"edge {i} weight must be 1 or 2, got {w}")
            incidence[u].append(i)
            incidence[v].append(i)
        for v in range(n):
            if len(incidence[v]) != 3:
                raise InputError(
                    f"vertex {v} has degree {len(incidence[v])}, must be 3")
            profile = tuple(sorted(self.edges[i][2] for i in incidence[v]))
            want = OR_WEIGHTS if self.kinds[v] is VertexKind.OR else AND_WEIGHTS
            if profile != want:
                raise InputError(
                    f"vertex {v} ({self.kinds[v].value}) has incident weights "
                    f"{profile}, must be {want}")
        object.__setattr__(self, "_incidence",
                           tuple(tuple(ix) for ix in incidence))

    @property
    def n_vertices(self) -> int:
        return len(self.kinds)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def incident_edges(self, v: int) -> Tuple[int, ...]:
        return self._incidence[v]

    def head(self, edge: int, o: Orientation) -> int:
        u, v, _ = self.edges[edge]
        return u if o[edge] == 0 else v

    def in_weight(self, v: int, o: Orientation) -> int:
        total = 0
        for i in self._incidence[v]:
            if self.head(i, o) == v:
                total += self.edges[i][2]
        return total

    # -- serialization -------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {"vertices": [k.value for k in self.kinds],
                "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "NclGraph":
        try:
            kinds = tuple(VertexKind(k) for k in obj["vertices"])
            edges = tuple(tuple(e) for e in obj["edges"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed constraint graph: {exc}") from exc
        return cls(kinds, edges)

    @classmethod
    def from_json(cls, text: str) -> "NclGraph":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from exc
        return cls.from_json_obj(obj)


def check_orientation(g: NclGraph, o: Sequence[int]) -> Orientation:
    o = tuple(o)
    if len(o) != g.n_edges:
        raise InputError(f"orientation covers {len(o)} edges, need {g.n_edges}")
    if any(b not in (0, 1) for b in o):
        raise InputError("orientation values must be 0 or 1")
    return o


def is_valid(g: NclGraph, o: Sequence[int]) -> bool:
    """True iff every vertex's incoming weight is at least 2."""
    o = check_orientation(g, o)
    return all(g.in_weight(v, o) >= 2 for v in range(g.n_vertices))


def flip(o: Orientation, edge: int) -> Orientation:
    out = list(o)
    out[edge] ^= 1
    return tuple(out)


def flip_is_legal(g: NclGraph, o: Orientation, edge: int) -> bool:
    """Only the two endpoints of the flipped edge need rechecking."""
    u, v, _ = g.edges[edge]
    o2 = flip(o, edge)
    return g.in_weight(u, o2) >= 2 and g.in_weight(v, o2) >= 2


def legal_flips(g: NclGraph, o: Sequence[int]) -> Tuple[int, ...]:
    """Edge indices whose reversal keeps the orientation valid, ascending."""
    o = check_orientation(g, o)
    if not is_valid(g, o):
        raise InputError("orientation is not valid")
    return tuple(e for e in range(g.n_edges) if flip_is_legal(g, o, e))


def replay_flips(g: NclGraph, o: Sequence[int],
                 flips: Iterable[int] = ()) -> Orientation:
    """Replay a flip sequence with every intermediate orientation checked."""
    cur = check_orientation(g, o)
    if not is_valid(g, cur):
        raise InputError("start orientation is not valid")
    for e in flips:
        if not (0 <= e < g.n_edges):
            raise InputError(f"flip of unknown edge {e}")
        if not flip_is_legal(g, cur, e):
            raise InputError(f"flip of edge {e} leaves an unsatisfied vertex")
        cur = flip(cur, e)
    return cur


def enumerate_valid(g: NclGraph, cap: int = EXHAUSTIVE_EDGE_CAP,
                    collect: bool = False):
    """Count (and optionally list) all valid orientations by exhaustion.

    Refuses instances with more than cap edges; 2^edges candidates are
    scanned. The empty graph has exactly one (empty) orientation.
    """
    m = g.n_edges
    if m > cap:
        raise InputError(f"exhaustive enumeration capped at {cap} edges, got {m}")
    found = []
    count = 0
    for mask in range(1 << m):
        o = tuple((mask >> i) & 1 for i in range(m))
        if is_valid(g, o):
            count += 1
            if collect:
                found.append(o)
    return (count, tuple(found)) if collect else (count, None)


def _bfs(g: NclGraph, start: Orientation, opts: SearchOptions, *,
         target: Optional[Orientation] = None,
         target_edge: Optional[int] = None,
         target_head: Optional[int] = None) -> ReachabilityResult:
    def hits(o: Orientation) -> bool:
        if target is not None:
            return o == target
        return g.head(target_edge, o) == target_head

    if hits(start):
        return ReachabilityResult(Status.REACHABLE, (), 1, 1)
    visited = {start: None}
    frontier = [start]
    peak = 1
    while frontier:
        nxt = []
        for o in frontier:
            for e in range(g.n_edges):
                if not flip_is_legal(g, o, e):
                    continue
                child = flip(o, e)
                if child in visited:
                    continue
                visited[child] = (o, e)
                nxt.append(child)
        frontier = nxt
        peak = max(peak, len(frontier))
        for o in frontier:
            if hits(o):
                moves = []
                cur = o
                while visited[cur] is not None:
                    parent, e = visited[cur]
                    moves.append(e)
                    cur = parent
                moves.reverse()
                return ReachabilityResult(Status.REACHABLE, tuple(moves),
                                          len(visited), peak)
        if len(visited) > opts.max_states:
            return ReachabilityResult(Status.LIMIT, None, len(visited), peak)
    return ReachabilityResult(Status.UNREACHABLE, None, len(visited), peak)


def solve_c2c(g: NclGraph, f: Sequence[int], t: Sequence[int],
              opts: SearchOptions = SearchOptions()) -> ReachabilityResult:
    """Can orientation t be obtained from f by a sequence of legal flips?

    The witness is a sequence of edge indices; every intermediate
    orientation along it is valid.
    """
    f = check_orientation(g, f)
    t = check_orientation(g, t)
    if not is_valid(g, f):
        raise InputError("start orientation is not valid")
    if not is_valid(g, t):
        raise InputError("target orientation is not valid")
    return _bfs(g, f, opts, target=t)


def solve_c2e(g: NclGraph, f: Sequence[int], edge: int, desired_head: int,
              opts: SearchOptions = SearchOptions()) -> ReachabilityResult:
    """Can some reachable valid orientation point edge at desired_head?"""
    f = check_orientation(g, f)
    if not is_valid(g, f):
        raise InputError("start orientation is not valid")
    if not (0 <= edge < g.n_edges):
        raise InputError(f"unknown edge {edge}")
    u, v, _ = g.edges[edge]
    if desired_head not in (u, v):
        raise InputError(f"vertex {desired_head} is not an endpoint of edge {edge}")
    return _bfs(g, f, opts, target_edge=edge, target_head=desired_head)
