"""Undirected simple graphs with dense integer vertices.

Vertices of a graph of order n are exactly 0..n-1; human-readable labels are
optional metadata and never affect semantics. Graphs are immutable after
construction and safe to share across threads.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Tuple

from .errors import InputError, ResourceLimitError

PLANARITY_ORDER_CAP = 256


def _normalize_edge(u: int, v: int) -> Tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SimpleGraph:
    """Simple undirected graph: no loops, no parallel edges.

    edges are stored normalized (u < v) and sorted; adjacency lists are
    precomputed in ascending order so every iteration over neighbors is
    deterministic.
    """

    order: int
    edges: Tuple[Tuple[int, int], ...]
    labels: Optional[Dict[int, str]] = None
    _adj: Tuple[Tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.order < 0:
            raise InputError("graph order must be non-negative")
        seen = set()
        norm = []
        for e in self.edges:
            u, v = e
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise InputError(f"edge {e} out of range for order {self.order}")
            e = _normalize_edge(u, v)
            if e in seen:
                raise InputError(f"duplicate edge {e}")
            seen.add(e)
            norm.append(e)
        norm.sort()
        object.__setattr__(self, "edges", tuple(norm))
        if self.labels is not None:
            for v in self.labels:
                if not (0 <= v < self.order):
                    raise InputError(f"label for unknown vertex {v}")
            object.__setattr__(self, "labels", dict(self.labels))
        adj = [[] for _ in range(self.order)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Tuple[int, int]],
                   labels: Optional[Dict[int, str]] = None) -> "SimpleGraph":
        return cls(order, tuple(tuple(e) for e in edges), labels)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        """Neighbors of v in ascending order."""
        if not (0 <= v < self.order):
            raise InputError(f"vertex {v} out of range for order {self.order}")
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.order and 0 <= v < self.order):
            raise InputError(f"edge query ({u},{v}) out of range")
        return v in self._adj[u]

    def max_degree(self) -> int:
        """Maximum vertex degree; 0 for edgeless graphs (including order 0)."""
        if self.order == 0:
            return 0
        return max(len(a) for a in self._adj)

    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    # -- serialization ------------------------------------------------------

    def to_json_obj(self) -> dict:
        obj = {"order": self.order, "edges": [list(e) for e in self.edges]}
        if self.labels:
            obj["labels"] = {str(k): v for k, v in sorted(self.labels.items())}
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "SimpleGraph":
        try:
            order = obj["order"]
            edges = [tuple(e) for e in obj["edges"]]
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed graph object: {exc}") from exc
        labels = obj.get("labels")
        if labels is not None:
            try:
                labels = {int(k): str(v) for k, v in labels.items()}
            except (ValueError, AttributeError) as exc:
                raise InputError(f"malformed labels: {exc}") from exc
        return cls(order, tuple(edges), labels)

    @classmethod
    def from_json(cls, text: str) -> "SimpleGraph":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON: {exc}") from exc
        return cls.from_json_obj(obj)

    def to_dot(self, name: str = "G",
               fillcolors: Optional[Dict[int, str]] = None) -> str:
        """DOT text for visualization; fillcolors maps vertex -> X11 color."""
        lines = [f"graph {name} {{", "  node [shape=circle];"]
        for v in range(self.order):
            attrs = []
            if self.labels and v in self.labels:
                attrs.append(f'label="{self.labels[v]}"')
            if fillcolors and v in fillcolors:
                attrs.append(f'style=filled fillcolor="{fillcolors[v]}"')
            lines.append(f"  {v} [{' '.join(attrs)}];" if attrs else f"  {v};")
        for u, v in self.edges:
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def is_planar_small(g: SimpleGraph, order_cap: int = PLANARITY_ORDER_CAP) -> bool:
    """Exact planarity for small graphs.

    True iff g has no subdivision of K5 or K3,3. Graphs larger than
    order_cap raise ResourceLimitError: planarity is then unverified, not
    false.
    """
    if g.order > order_cap:
        raise ResourceLimitError(
            f"planarity check capped at order {order_cap}, got {g.order}")
    # Euler bound gives a fast certain negative.
    if g.order >= 3 and len(g.edges) > 3 * g.order - 6:
        return False
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges)
    ok, _ = nx.check_planarity(h, counterexample=False)
    return bool(ok)
