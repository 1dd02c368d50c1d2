"""Friends-and-strangers instances, swap semantics, and reachability solvers.

An instance pairs a location graph X with a people graph Y of the same order
n. A configuration assigns the person c[i] to location i (a permutation of
0..n-1). Two people may swap exactly when their locations are adjacent in X
and they are friends in Y; reachability questions are asked over the graph
whose vertices are all n! configurations and whose edges are legal swaps.

Quotient mode identifies configurations that agree after replacing each
person by their color class; this is sound when every class is a clique in Y
whose members have identical friendships outside the class, which
verify_color_classing checks.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from ._search import COMPILED_MAX_CELLS, get_kernel, pure
from .errors import InputError, MoveError
from .graphs import SimpleGraph
from .result import ComponentReport, ReachabilityResult, SearchOptions, Status

Configuration = Tuple[int, ...]


@dataclass(frozen=True)
class FasInstance:
    X: SimpleGraph  # locations
    Y: SimpleGraph  # people

    def __post_init__(self):
        if self.X.order != self.Y.order:
            raise InputError(
                f"location and people graphs must share an order: "
                f"{self.X.order} != {self.Y.order}")

    @property
    def order(self) -> int:
        return self.X.order


@dataclass(frozen=True)
class SwapMove:
    """Exchange of the occupants of two adjacent locations; loc_a < loc_b."""

    loc_a: int
    loc_b: int

    def __post_init__(self):
        if self.loc_a == self.loc_b:
            raise InputError("swap endpoints must differ")
        if self.loc_a > self.loc_b:
            a, b = self.loc_b, self.loc_a
            object.__setattr__(self, "loc_a", a)
            object.__setattr__(self, "loc_b", b)


@dataclass(frozen=True)
class ColorClassing:
    """Assignment of each person to a class id in 0..n_classes-1."""

    class_of: Tuple[int, ...]
    n_classes: int

    def __post_init__(self):
        object.__setattr__(self, "class_of", tuple(self.class_of))
        if any(not (0 <= c < self.n_classes) for c in self.class_of):
            raise InputError("class id out of range")

    @classmethod
    def from_sequence(cls, seq: Sequence[int]) -> "ColorClassing":
        seq = tuple(int(x) for x in seq)
        return cls(seq, max(seq) + 1 if seq else 0)

    def pattern_of(self, c: Configuration) -> Tuple[int, ...]:
        return tuple(self.class_of[p] for p in c)


def check_configuration(inst: FasInstance, c: Sequence[int]) -> Configuration:
    c = tuple(c)
    n = inst.order
    if len(c) != n:
        raise InputError(f"configuration length {len(c)} != order {n}")
    if sorted(c) != list(range(n)):
        raise InputError("configuration is not a permutation of 0..n-1")
    return c


def legal_swaps(inst: FasInstance, c: Configuration) -> Tuple[SwapMove, ...]:
    """All legal swaps at c, ascending by (loc_a, loc_b)."""
    c = check_configuration(inst, c)
    Y = inst.Y
    return tuple(SwapMove(u, v) for u, v in inst.X.edges
                 if Y.has_edge(c[u], c[v]))


def apply_swap(c: Configuration, m: SwapMove,
               inst: Optional[FasInstance] = None) -> Configuration:
    """Apply one swap; pass inst to get checked mode (MoveError on illegal)."""
    a, b = m.loc_a, m.loc_b
    if inst is not None:
        check_configuration(inst, c)
        if not inst.X.has_edge(a, b):
            raise MoveError(f"locations {a},{b} not adjacent")
        if not inst.Y.has_edge(c[a], c[b]):
            raise MoveError(f"people {c[a]},{c[b]} are strangers")
    if not (0 <= a < len(c) and 0 <= b < len(c)):
        raise MoveError(f"swap ({a},{b}) out of range")
    out = list(c)
    out[a], out[b] = out[b], out[a]
    return tuple(out)


def replay_witness(inst: FasInstance, c: Configuration,
                   witness: Iterable[SwapMove]) -> Configuration:
    """Replay witness from c with every step checked; returns the end state."""
    cur = check_configuration(inst, c)
    for m in witness:
        cur = apply_swap(cur, m, inst)
    return cur


def verify_color_classing(inst: FasInstance, cc: ColorClassing) -> bool:
    """True iff every class is a clique in Y with identical outside friendships."""
    n = inst.order
    if len(cc.class_of) != n:
        raise InputError(f"classing covers {len(cc.class_of)} people, need {n}")
    members: List[List[int]] = [[] for _ in range(cc.n_classes)]
    for person, cls in enumerate(cc.class_of):
        members[cls].append(person)
    Y = inst.Y
    for group in members:
        for i, y in enumerate(group):
            for yp in group[i + 1:]:
                if not Y.has_edge(y, yp):
                    return False
                if (set(Y.neighbors(y)) - {yp}) != (set(Y.neighbors(yp)) - {y}):
                    return False
    return True


# -- search machinery --------------------------------------------------------


class _Space:
    """Prepared search space: token-level states plus kernel inputs."""

    def __init__(self, inst: FasInstance, classing: Optional[ColorClassing],
                 kernel_name: Optional[str]):
        n = inst.order
        self.n = n
        self.moves = tuple(SwapMove(u, v) for u, v in inst.X.edges)
        if classing is None:
            ntok = n
            self.tok_of = None
        else:
            if not verify_color_classing(inst, classing):
                raise InputError("invalid color classing for quotient search")
            ntok = classing.n_classes
            self.tok_of = classing.class_of
        self.ntok = ntok
        adj = bytearray(ntok * ntok)
        if classing is None:
            for u, v in inst.Y.edges:
                adj[u * ntok + v] = 1
                adj[v * ntok + u] = 1
        else:
            rep = [None] * ntok
            for person, cls in enumerate(classing.class_of):
                if rep[cls] is None:
                    rep[cls] = person
            for a in range(ntok):
                for b in range(a + 1, ntok):
                    if rep[a] is not None and rep[b] is not None \
                            and inst.Y.has_edge(rep[a], rep[b]):
                        adj[a * ntok + b] = 1
                        adj[b * ntok + a] = 1
        self.adj = bytes(adj)
        self.wide = n > COMPILED_MAX_CELLS or ntok > 255
        if self.wide:
            self.eu = tuple(u for u, v in inst.X.edges)
            self.ev = tuple(v for u, v in inst.X.edges)
            self.expand = pure.expand_level_obj
            self.expand_set = pure.expand_level_set_obj
        else:
            self.eu = bytes(u for u, v in inst.X.edges)
            self.ev = bytes(v for u, v in inst.X.edges)
            kernel = get_kernel(kernel_name, n_cells=n)
            self.expand = kernel.expand_level
            self.expand_set = kernel.expand_level_set

    def encode(self, c: Sequence[int]):
        toks = c if self.tok_of is None else [self.tok_of[p] for p in c]
        return tuple(toks) if self.wide else bytes(toks)

    def decode(self, key) -> Tuple[int, ...]:
        return tuple(key)


class _Budget:
    def __init__(self, opts: SearchOptions):
        self.max_states = opts.max_states
        self.deadline = (time.monotonic() + opts.max_seconds
                         if opts.max_seconds is not None else None)

    def exceeded(self, stored: int) -> bool:
        if stored > self.max_states:
            return True
        return self.deadline is not None and time.monotonic() > self.deadline


def _walk_moves(visited: dict, key) -> List[int]:
    """Edge indices along the parent chain from the search root to key."""
    out = []
    cur = key
    while visited[cur] is not None:
        parent, k = visited[cur]
        out.append(k)
        cur = parent
    out.reverse()
    return out


def _result(space: _Space, status: Status, move_idxs: Optional[List[int]],
            explored: int, peak: int) -> ReachabilityResult:
    witness = None
    if status is Status.REACHABLE:
        witness = tuple(space.moves[k] for k in move_idxs)
    return ReachabilityResult(status, witness, explored, peak)


def _search(space: _Space, start_key, opts: SearchOptions, *,
            target_key=None, target_loc: Optional[int] = None,
            target_tok: Optional[int] = None) -> ReachabilityResult:
    """Level-by-level BFS to an exact state or to a token-at-location goal."""
    if target_key is not None and start_key == target_key:
        return _result(space, Status.REACHABLE, [], 1, 1)
    if target_loc is not None and start_key[target_loc] == target_tok:
        return _result(space, Status.REACHABLE, [], 1, 1)
    budget = _Budget(opts)
    visited = {start_key: None}
    frontier = [start_key]
    peak = 1
    while frontier:
        frontier = space.expand(frontier, visited, space.eu, space.ev,
                                space.adj, space.ntok)
        peak = max(peak, len(frontier))
        if target_key is not None and target_key in visited:
            return _result(space, Status.REACHABLE,
                           _walk_moves(visited, target_key), len(visited), peak)
        if target_loc is not None:
            for s in frontier:
                if s[target_loc] == target_tok:
                    return _result(space, Status.REACHABLE,
                                   _walk_moves(visited, s), len(visited), peak)
        if budget.exceeded(len(visited)):
            return _result(space, Status.LIMIT, None, len(visited), peak)
    return _result(space, Status.UNREACHABLE, None, len(visited), peak)


def _search_bidir(space: _Space, start_key, target_key,
                  opts: SearchOptions) -> ReachabilityResult:
    """Meet-in-the-middle BFS; swaps are involutions so both sides expand alike."""
    if start_key == target_key:
        return _result(space, Status.REACHABLE, [], 1, 1)
    budget = _Budget(opts)
    fwd = {start_key: None}
    bwd = {target_key: None}
    ffront = [start_key]
    bfront = [target_key]
    peak = 1
    while ffront and bfront:
        if len(ffront) <= len(bfront):
            ffront = space.expand(ffront, fwd, space.eu, space.ev,
                                  space.adj, space.ntok)
            new, other = ffront, bwd
        else:
            bfront = space.expand(bfront, bwd, space.eu, space.ev,
                                  space.adj, space.ntok)
            new, other = bfront, fwd
        peak = max(peak, len(ffront), len(bfront))
        for s in new:
            if s in other:
                fmoves = _walk_moves(fwd, s)
                bmoves = _walk_moves(bwd, s)
                return _result(space, Status.REACHABLE,
                               fmoves + bmoves[::-1],
                               len(fwd) + len(bwd), peak)
        if budget.exceeded(len(fwd) + len(bwd)):
            return _result(space, Status.LIMIT, None, len(fwd) + len(bwd), peak)
    return _result(space, Status.UNREACHABLE, None, len(fwd) + len(bwd), peak)


# -- public solvers -----------------------------------------------------------


def solve_c2c(inst: FasInstance, frm: Sequence[int], to: Sequence[int],
              opts: SearchOptions = SearchOptions()) -> ReachabilityResult:
    """Is the target configuration reachable from the start by legal swaps?

    In quotient mode the question is asked of the class-valued patterns:
    REACHABLE means some configuration pattern-equal to the target is
    reachable, and the witness replays to such a configuration.
    """
    frm = check_configuration(inst, frm)
    to = check_configuration(inst, to)
    space = _Space(inst, opts.quotient, opts.kernel)
    skey, tkey = space.encode(frm), space.encode(to)
    if opts.bidirectional:
        return _search_bidir(space, skey, tkey, opts)
    return _search(space, skey, opts, target_key=tkey)


def solve_to_pattern(inst: FasInstance, frm: Sequence[int],
                     classing: ColorClassing, pattern: Sequence[int],
                     opts: SearchOptions = SearchOptions()
                     ) -> ReachabilityResult:
    """Reach any configuration whose class pattern equals the given one.

    This is the primitive behind quotient-mode solve_c2c; it accepts the
    target as a pattern directly so callers need not fabricate a labeled
    representative.
    """
    frm = check_configuration(inst, frm)
    pattern = tuple(int(x) for x in pattern)
    if len(pattern) != inst.order:
        raise InputError(f"pattern length {len(pattern)} != order {inst.order}")
    if any(not (0 <= x < classing.n_classes) for x in pattern):
        raise InputError("pattern value out of class range")
    space = _Space(inst, classing, opts.kernel)
    skey = space.encode(frm)
    tkey = tuple(pattern) if space.wide else bytes(pattern)
    if sorted(skey) != sorted(tkey):
        raise InputError("target pattern has a different class census")
    if opts.bidirectional:
        return _search_bidir(space, skey, tkey, opts)
    return _search(space, skey, opts, target_key=tkey)


def solve_person_to_location(inst: FasInstance, frm: Sequence[int], p: int,
                             t: int, opts: SearchOptions = SearchOptions()
                             ) -> ReachabilityResult:
    """Can person p ever occupy location t, starting from frm?

    Quotient mode answers at class level: whether p's class can occupy t.
    Give p a singleton class to make that exact for the individual person.
    Bidirectional search does not apply to goal predicates and is ignored.
    """
    frm = check_configuration(inst, frm)
    n = inst.order
    if not (0 <= p < n and 0 <= t < n):
        raise InputError(f"person {p} or location {t} out of range")
    space = _Space(inst, opts.quotient, opts.kernel)
    tok = p if opts.quotient is None else opts.quotient.class_of[p]
    return _search(space, space.encode(frm), opts,
                   target_loc=t, target_tok=tok)


def enumerate_component(inst: FasInstance, frm: Sequence[int],
                        classing: Optional[ColorClassing] = None,
                        cap: int = 10_000_000, collect: bool = False,
                        kernel: Optional[str] = None) -> ComponentReport:
    """Exhaust the reachable component of frm (or its pattern, with classing).

    Returns the exact component size when it is below cap, else an
    incomplete report. With collect=True the report carries the full state
    set as token strings (bytes for narrow instances).
    """
    frm = check_configuration(inst, frm)
    if cap < 1:
        raise InputError("cap must be at least 1")
    space = _Space(inst, classing, kernel)
    start = space.encode(frm)
    visited = {start}
    frontier = [start]
    while frontier:
        if len(visited) > cap:
            return ComponentReport(False, len(visited), len(frontier),
                                   frozenset(visited) if collect else None)
        frontier = space.expand_set(frontier, visited, space.eu, space.ev,
                                    space.adj, space.ntok)
    return ComponentReport(True, len(visited), 0,
                           frozenset(visited) if collect else None)
