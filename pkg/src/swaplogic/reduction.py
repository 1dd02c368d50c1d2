"""Compile a constraint graph plus two orientations into a swap instance.

Every constraint edge becomes an edge gadget (blue kind for weight 2, red
for weight 1) and every vertex a junction gadget; gadgets join only along
single port edges, so the location graph keeps maximum degree 3 and stays
planar whenever the input graph is. Cell allocation is deterministic:
junction interiors first in vertex order, then edge gadgets in edge order,
each block keeping its blueprint-local numbering.

The configuration for an orientation places every edge gadget in its
canonical drawn or migrated pattern and every junction interior in the
pattern matching which of its edges point away. People are created from the
start orientation f (person i carries the color that pattern of f puts at
cell i, so sigma is the identity); the configuration for any other
orientation moves, per color, only the people sitting on cells whose color
actually changes, matched in ascending cell order. That keeps configuration
differences local to the gadgets a flip touches.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from . import fas, ncl
from .colors import (Color, build_people_graph, classing_from_colors,
                     color_names, parse_color)
from .errors import ConstructionError, InputError, ReductionDefectError
from .fas import Configuration, FasInstance, SwapMove
from .gadgets import (EdgeDirection, GadgetKind, Port, blueprint,
                      direction_of, mirrored_pattern, quotient_colors_at)
from .graphs import SimpleGraph
from .ncl import NclGraph, Orientation
from .result import SearchOptions, Status


@dataclass(frozen=True)
class EdgePlacement:
    """Where one constraint edge lives in the location graph."""

    edge: int
    kind: GadgetKind
    cells: Tuple[int, ...]
    # (vertex, junction port name, junction cell, gadget cell) per gadget port
    port_wiring: Tuple[Tuple[int, str, int, int], ...]


@dataclass(frozen=True)
class VertexPlacement:
    vertex: int
    kind: GadgetKind
    cells: Tuple[int, ...]
    # port name -> constraint edge index served by that port
    port_edges: Mapping[str, int]


@dataclass(frozen=True)
class ReductionArtifact:
    ncl: NclGraph
    f: Orientation
    t: Orientation
    fas: FasInstance
    sigma: Configuration
    sigma_prime: Configuration
    colors: Tuple[Color, ...]
    edge_map: Tuple[EdgePlacement, ...]
    vertex_map: Tuple[VertexPlacement, ...]

    @property
    def classing(self) -> fas.ColorClassing:
        return classing_from_colors(self.colors)


def _junction_kind(kind: ncl.VertexKind) -> GadgetKind:
    return GadgetKind.OR_VERTEX if kind is ncl.VertexKind.OR \
        else GadgetKind.AND_VERTEX


def _edge_kind(weight: int) -> GadgetKind:
    return GadgetKind.BLUE_EDGE if weight == 2 else GadgetKind.RED_EDGE


def _assign_ports(g: NclGraph) -> Dict[Tuple[int, int], Port]:
    """Deterministic (vertex, edge) -> junction port assignment.

    Ports accepting a given edge-gadget kind are handed out in port order to
    that vertex's matching incident edges in ascending edge order; for AND
    vertices this sends the weight-2 edge to the blue port.
    """
    assignment: Dict[Tuple[int, int], Port] = {}
    for v in range(g.n_vertices):
        bp = blueprint(_junction_kind(g.kinds[v]))
        free: Dict[GadgetKind, List[Port]] = {}
        for port in bp.ports:
            free.setdefault(port.edge_kind, []).append(port)
        for e in g.incident_edges(v):
            kind = _edge_kind(g.edges[e][2])
            pool = free.get(kind, [])
            if not pool:
                raise ConstructionError(
                    f"vertex {v} has no free {kind.value} port for edge {e}")
            assignment[(v, e)] = pool.pop(0)
    return assignment


def reduce_instance(g: NclGraph, f: Sequence[int],
                    t: Sequence[int]) -> ReductionArtifact:
    """Build the swap instance and both endpoint configurations."""
    f = ncl.check_orientation(g, f)
    t = ncl.check_orientation(g, t)
    if not ncl.is_valid(g, f):
        raise InputError("start orientation is not valid")
    if not ncl.is_valid(g, t):
        raise InputError("target orientation is not valid")

    ports = _assign_ports(g)
    vertex_base: List[int] = []
    nxt = 0
    for v in range(g.n_vertices):
        vertex_base.append(nxt)
        nxt += blueprint(_junction_kind(g.kinds[v])).n_cells
    edge_base: List[int] = []
    for e in range(g.n_edges):
        edge_base.append(nxt)
        nxt += blueprint(_edge_kind(g.edges[e][2])).n_cells

    edges: List[Tuple[int, int]] = []
    for v in range(g.n_vertices):
        bp = blueprint(_junction_kind(g.kinds[v]))
        base = vertex_base[v]
        edges.extend((base + a, base + b) for a, b in bp.graph.edges)
    edge_map: List[EdgePlacement] = []
    for e, (u, v, w) in enumerate(g.edges):
        kind = _edge_kind(w)
        bp = blueprint(kind)
        base = edge_base[e]
        edges.extend((base + a, base + b) for a, b in bp.graph.edges)
        wiring = []
        for side, vert in ((0, u), (1, v)):
            port = ports[(vert, e)]
            jcell = vertex_base[vert] + port.location
            gcell = base + bp.ports[side].location
            edges.append((jcell, gcell))
            wiring.append((vert, port.name, jcell, gcell))
        edge_map.append(EdgePlacement(
            e, kind, tuple(range(base, base + bp.n_cells)), tuple(wiring)))

    vertex_map: List[VertexPlacement] = []
    for v in range(g.n_vertices):
        bp = blueprint(_junction_kind(g.kinds[v]))
        base = vertex_base[v]
        port_edges = {ports[(v, e)].name: e for e in g.incident_edges(v)}
        vertex_map.append(VertexPlacement(
            v, bp.kind, tuple(range(base, base + bp.n_cells)), port_edges))

    X = SimpleGraph.from_edges(nxt, edges)
    if X.order and X.max_degree() > 3:
        raise ConstructionError("assembled location graph exceeds degree 3")

    edge_map = tuple(edge_map)
    vertex_map = tuple(vertex_map)
    colors = _pattern_parts(g, edge_map, vertex_map, nxt, f)
    sigma = tuple(range(nxt))
    target = _pattern_parts(g, edge_map, vertex_map, nxt, t)
    sigma_prime = _config_for_pattern(colors, sigma, target)
    return ReductionArtifact(
        ncl=g, f=f, t=t, fas=FasInstance(X, build_people_graph(colors)),
        sigma=sigma, sigma_prime=sigma_prime, colors=colors,
        edge_map=edge_map, vertex_map=vertex_map)


# -- canonical patterns -------------------------------------------------------


def _or_interior_pattern(bp, spent_ports: Sequence[int]) -> Tuple[Color, ...]:
    """Junction interior after releasing one blue per spent port.

    Ports are served in ascending order; each takes the nearest remaining
    blue (ties toward the lower cell), whose cell backfills light.
    """
    colors = list(bp.initial_colors)
    dist = {}
    for port_idx in sorted(spent_ports):
        loc = bp.ports[port_idx].location
        best = None
        frontier = [(0, loc)]
        seen = {loc}
        while frontier:
            d, c = frontier.pop(0)
            if colors[c] == Color.BLUE and (best is None or (d, c) < best):
                best = (d, c)
            for nb in bp.graph.neighbors(c):
                if nb not in seen:
                    seen.add(nb)
                    frontier.append((d + 1, nb))
        if best is None:
            raise ConstructionError("junction has no blue left to release")
        colors[best[1]] = Color.LIGHT_BLUE
    return tuple(colors)


def _and_interior_pattern(bp, spent_ports_by_name) -> Tuple[Color, ...]:
    from .gadgets import AND_BLUE_SPENT_COLORS

    if "blue" in spent_ports_by_name:
        reds = {"red_a", "red_b"} & set(spent_ports_by_name)
        if reds:
            raise ConstructionError(
                "junction cannot release its blue and a red together")
        return AND_BLUE_SPENT_COLORS
    colors = list(bp.initial_colors)
    for port in bp.ports:
        if port.name in spent_ports_by_name:
            colors[port.location] = Color.LIGHT_RED
    return tuple(colors)


def _pattern_parts(g: NclGraph, edge_map: Tuple[EdgePlacement, ...],
                   vertex_map: Tuple[VertexPlacement, ...], total: int,
                   o: Orientation) -> Tuple[Color, ...]:
    colors: List[Optional[Color]] = [None] * total
    for ep in edge_map:
        bp = blueprint(ep.kind)
        u = g.edges[ep.edge][0]
        drawn = g.head(ep.edge, o) == u
        pat = bp.initial_colors if drawn else mirrored_pattern(bp)
        for cell, c in zip(ep.cells, pat):
            colors[cell] = c
    for vp in vertex_map:
        bp = blueprint(vp.kind)
        spent_names = {name for name, e in vp.port_edges.items()
                       if g.head(e, o) != vp.vertex}
        if vp.kind is GadgetKind.OR_VERTEX:
            spent_idx = [i for i, p in enumerate(bp.ports)
                         if p.name in spent_names]
            pat = _or_interior_pattern(bp, spent_idx)
        else:
            pat = _and_interior_pattern(bp, spent_names)
        for cell, c in zip(vp.cells, pat):
            colors[cell] = c
    return tuple(colors)


def _pattern(art: ReductionArtifact, o: Orientation) -> Tuple[Color, ...]:
    return _pattern_parts(art.ncl, art.edge_map, art.vertex_map,
                          art.fas.order, o)


def _config_for_pattern(base: Tuple[Color, ...], sigma: Configuration,
                        target: Tuple[Color, ...]) -> Configuration:
    """Move, per color, only the people on cells whose color changes."""
    config: List[Optional[int]] = [None] * len(base)
    moved: Dict[Color, List[int]] = {}
    for cell, (have, want) in enumerate(zip(base, target)):
        if have == want:
            config[cell] = sigma[cell]
        else:
            moved.setdefault(have, []).append(sigma[cell])
    for cell, (have, want) in enumerate(zip(base, target)):
        if have != want:
            pool = moved.get(want)
            if not pool:
                raise ConstructionError("pattern census mismatch")
            config[cell] = pool.pop(0)
    return tuple(config)


def orientation_to_pattern(art: ReductionArtifact,
                           o: Sequence[int]) -> Tuple[Color, ...]:
    """Canonical color-per-cell pattern for a valid orientation."""
    o = ncl.check_orientation(art.ncl, o)
    if not ncl.is_valid(art.ncl, o):
        raise InputError("orientation is not valid")
    return _pattern(art, o)


def orientation_to_config(art: ReductionArtifact,
                          o: Sequence[int]) -> Configuration:
    """Canonical labeled configuration for a valid orientation.

    Derived from sigma by moving, per color, only the people on cells whose
    color differs between the patterns of f and o (ascending cell order on
    both sides), so it agrees with sigma wherever the patterns agree.
    """
    return _config_for_pattern(art.colors, art.sigma,
                               orientation_to_pattern(art, o))


def edge_directions(art: ReductionArtifact, state: Sequence[int],
                    quotient: bool = False
                    ) -> Tuple[Optional[EdgeDirection], ...]:
    """Per-edge classification of a configuration or quotient state."""
    out = []
    for ep in art.edge_map:
        if quotient:
            pattern = quotient_colors_at(state, ep.cells)
        else:
            pattern = tuple(Color(art.colors[state[c]]) for c in ep.cells)
        out.append(direction_of(blueprint(ep.kind), pattern))
    return tuple(out)


def _directions_to_orientation(art: ReductionArtifact,
                               dirs) -> Optional[Orientation]:
    bits = []
    for ep, d in zip(art.edge_map, dirs):
        if d is None:
            return None
        u, v, _ = art.ncl.edges[ep.edge]
        # Gadget port 0 is wired to the first endpoint, so TOWARD_PORT_0
        # means the head is u.
        bits.append(0 if d is EdgeDirection.TOWARD_PORT_0 else 1)
    return tuple(bits)


def config_to_orientation(art: ReductionArtifact,
                          c: Sequence[int]) -> Optional[Orientation]:
    """Classify a configuration; None when any gadget is mid-migration."""
    c = fas.check_configuration(art.fas, c)
    return _directions_to_orientation(art, edge_directions(art, c))


def pattern_to_orientation(art: ReductionArtifact,
                           state: Sequence[int]) -> Optional[Orientation]:
    """Classify a quotient state (class ids per cell); None if transitional."""
    return _directions_to_orientation(
        art, edge_directions(art, state, quotient=True))


# -- witness translation ------------------------------------------------------


def _flip_region(art: ReductionArtifact, edge: int) -> Tuple[int, ...]:
    ep = art.edge_map[edge]
    u, v, _ = art.ncl.edges[edge]
    cells = list(ep.cells)
    cells.extend(art.vertex_map[u].cells)
    if v != u:
        cells.extend(art.vertex_map[v].cells)
    return tuple(sorted(cells))


def _local_flip_swaps(art: ReductionArtifact, cur: Configuration,
                      cur_o: Orientation, edge: int,
                      max_states: int) -> Tuple[SwapMove, ...]:
    """Swap subsequence realizing one flip, found by search inside the
    affected gadget and its two junction interiors with everything else
    frozen."""
    region = _flip_region(art, edge)
    index = {cell: i for i, cell in enumerate(region)}
    sub_edges = [(index[a], index[b]) for a, b in art.fas.X.edges
                 if a in index and b in index]
    sub_people = [cur[cell] for cell in region]
    sub_colors = [art.colors[p] for p in sub_people]
    sub_Y = build_people_graph(sub_colors)
    sub_inst = FasInstance(SimpleGraph.from_edges(len(region), sub_edges),
                           sub_Y)
    target_full = _pattern(art, ncl.flip(cur_o, edge))
    target = [int(target_full[cell]) for cell in region]
    res = fas.solve_to_pattern(
        sub_inst, tuple(range(len(region))), classing_from_colors(sub_colors),
        target, SearchOptions(max_states=max_states))
    if res.status is not Status.REACHABLE:
        raise ReductionDefectError(
            f"no local swap sequence realizes flipping edge {edge} "
            f"({res.status.value})")
    return tuple(SwapMove(region[m.loc_a], region[m.loc_b])
                 for m in res.witness)


def translate_witness(art: ReductionArtifact, flips: Sequence[int],
                      max_states_per_flip: int = 1_000_000
                      ) -> Tuple[SwapMove, ...]:
    """Expand a flip sequence into a legal swap sequence from sigma.

    Replaying the result from sigma lands on a configuration whose color
    pattern is the canonical pattern of the final orientation. Within color
    classes the landing labels are whatever the expansion produces; pattern
    equality is the guaranteed level of agreement.
    """
    cur_o = art.f
    cur_c = art.sigma
    out: List[SwapMove] = []
    for e in flips:
        if not (0 <= e < art.ncl.n_edges):
            raise InputError(f"flip of unknown edge {e}")
        if not ncl.flip_is_legal(art.ncl, cur_o, e):
            raise InputError(f"flip of edge {e} is illegal at this point")
        swaps = _local_flip_swaps(art, cur_c, cur_o, e, max_states_per_flip)
        for m in swaps:
            cur_c = fas.apply_swap(cur_c, m, art.fas)
        out.extend(swaps)
        cur_o = ncl.flip(cur_o, e)
    final = tuple(Color(art.colors[p]) for p in cur_c)
    if final != _pattern(art, cur_o):
        raise ReductionDefectError("translated witness missed the target pattern")
    return tuple(out)


# -- serialization -------------------------------------------------------------


def artifact_to_json_obj(art: ReductionArtifact) -> dict:
    return {
        "fas": {"X": art.fas.X.to_json_obj(), "Y": art.fas.Y.to_json_obj()},
        "sigma": list(art.sigma),
        "sigma_prime": list(art.sigma_prime),
        "colors": list(color_names(art.colors)),
        "edge_map": {
            str(ep.edge): {
                "kind": ep.kind.value,
                "cells": list(ep.cells),
                "ports": [{"vertex": w, "port": name,
                           "junction_cell": jc, "gadget_cell": gc}
                          for w, name, jc, gc in ep.port_wiring],
            } for ep in art.edge_map
        },
        "vertex_map": {
            str(vp.vertex): {
                "kind": vp.kind.value,
                "cells": list(vp.cells),
                "port_edges": dict(sorted(vp.port_edges.items())),
            } for vp in art.vertex_map
        },
    }


def artifact_to_json(art: ReductionArtifact) -> str:
    return json.dumps(artifact_to_json_obj(art), sort_keys=True, indent=2)
