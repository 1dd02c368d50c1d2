"""Gadget blueprints, the isolation harness, and the direction classifier.

Four blueprints are transcribed as data: two edge gadgets (the weight-2
"blue" kind and its red renaming) and the two junction gadgets (OR and AND).
Cell numbering is row-major over the drawing grid, top row first; the grid
coordinates kept on each blueprint are the authority for that numbering and
are dumped by the transcription table (see docs/gadget_transcription.md).

An edge gadget simulates one oriented constraint edge. Its drawn placement
points toward port 0; the opposite placement is generated by running the
token migration, never hand-authored, and equals the mirror image of the
drawn one. The migration locks an incoming heavy token at cell ALPHA, walks
the green across the top path to cell BETA, and releases the stored heavy
token at cell GAMMA toward the far side.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .colors import Color, build_people_graph, classing_from_colors, friendship
from .errors import ConstructionError, InputError
from .fas import ColorClassing, Configuration, FasInstance
from .graphs import SimpleGraph

CORRIDOR_LEN = 3


class GadgetKind(enum.Enum):
    BLUE_EDGE = "BLUE_EDGE"
    RED_EDGE = "RED_EDGE"
    OR_VERTEX = "OR_VERTEX"
    AND_VERTEX = "AND_VERTEX"


EDGE_KINDS = (GadgetKind.BLUE_EDGE, GadgetKind.RED_EDGE)
VERTEX_KINDS = (GadgetKind.OR_VERTEX, GadgetKind.AND_VERTEX)


def heavy_color(kind: GadgetKind) -> Color:
    return Color.BLUE if kind is GadgetKind.BLUE_EDGE else Color.RED


def light_color(kind: GadgetKind) -> Color:
    return Color.LIGHT_BLUE if kind is GadgetKind.BLUE_EDGE else Color.LIGHT_RED


@dataclass(frozen=True)
class Port:
    """Boundary location where an external edge attaches.

    edge_kind names the edge-gadget kind that plugs in here; it fixes the
    corridor light color and the heavy token color of the harness.
    """

    name: str
    location: int
    edge_kind: GadgetKind


@dataclass(frozen=True)
class GadgetBlueprint:
    kind: GadgetKind
    graph: SimpleGraph
    initial_colors: Tuple[Color, ...]
    ports: Tuple[Port, ...]
    named: Mapping[str, int]
    grid: Tuple[Tuple[int, int], ...]  # (x, y) drawing coordinate per cell

    @property
    def n_cells(self) -> int:
        return self.graph.order


class EdgeDirection(enum.Enum):
    TOWARD_PORT_0 = 0
    TOWARD_PORT_1 = 1


# -- edge gadgets -------------------------------------------------------------
#
# Cells 0..7 are the top path left to right, 8..12 the lower-left arm from
# the port inward (12 is the dead end ALPHA), 13..17 the lower-right arm
# from the dead end GAMMA outward to the port.

_EDGE_GRID = (
    (4, 2), (6, 2), (8, 2), (10, 2), (12, 2), (14, 2), (16, 2), (18, 2),
    (0, 0), (2, 0), (4, 0), (6, 0), (8, 0),
    (14, 0), (16, 0), (18, 0), (20, 0), (22, 0),
)

_EDGE_EDGES = (
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7),
    (1, 11),
    (8, 9), (9, 10), (10, 11), (11, 12),
    (6, 14),
    (13, 14), (14, 15), (15, 16), (16, 17),
)

ALPHA, BETA, GAMMA = 12, 7, 13

_EDGE_NAMED = {"alpha": ALPHA, "beta": BETA, "gamma": GAMMA}

# Mirror symmetry of the edge-gadget location graph.
EDGE_MIRROR = (7, 6, 5, 4, 3, 2, 1, 0, 17, 16, 15, 14, 13, 12, 11, 10, 9, 8)

_W = Color.WHITE

_BLUE_EDGE_COLORS = (
    Color.GREEN, Color.VIOLET, _W, _W, _W, _W, _W, Color.ORANGE,
    Color.LIGHT_BLUE, Color.LIGHT_BLUE, Color.LIGHT_BLUE, Color.LIGHT_BLUE,
    Color.ORANGE,
    Color.BLUE, Color.VIOLET,
    Color.LIGHT_BLUE, Color.LIGHT_BLUE, Color.LIGHT_BLUE,
)

# Token migration entering at port 0, as internal cell swaps. Entry and exit
# across the port boundaries are supplied by the caller's context.
MIGRATION_FROM_PORT_0 = (
    (8, 9), (9, 10), (10, 11),        # heavy token walks inward
    (11, 12),                         # locks at ALPHA, orange pushed out
    (1, 11),                          # orange trades with the violet anchor
    (0, 1),                           # green set free
    (1, 2), (2, 3), (3, 4), (4, 5), (5, 6),   # green walks the top path
    (6, 7),                           # green reaches BETA, orange freed
    (6, 14),                          # orange trades with the right violet
    (13, 14),                         # stored heavy token leaves GAMMA
    (14, 15), (15, 16), (16, 17),     # and walks out toward port 1
)


def _rename_red(colors: Sequence[Color]) -> Tuple[Color, ...]:
    ren = {Color.BLUE: Color.RED, Color.LIGHT_BLUE: Color.LIGHT_RED}
    return tuple(ren.get(c, c) for c in colors)


def rename_blue_to_red(colors: Sequence[Color]) -> Tuple[Color, ...]:
    """Color renaming that maps the blue edge gadget onto the red one."""
    return _rename_red(colors)


# -- OR junction ---------------------------------------------------------------
#
# A 5-cell path holding two free heavy-kind (blue) tokens between light
# cells; the three light cells are the ports. Cells top to bottom.

_OR_GRID = ((-2, 8), (-2, 6), (-2, 4), (-2, 2), (-2, 0))
_OR_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4))
_OR_COLORS = (Color.LIGHT_BLUE, Color.BLUE, Color.LIGHT_BLUE, Color.BLUE,
              Color.LIGHT_BLUE)

# -- AND junction --------------------------------------------------------------
#
# 14 cells, row-major topined to bottom. One stored blue sits behind a violet
# gate on each side; each gate opens only after the matching red bolt is
# driven into its slot, so the blue leaves only when both red edges stay in.

_AND_GRID = (
    (-10, 8), (-2, 8),
    (-8, 4), (-4, 4), (-2, 4),
    (-10, 2), (-8, 2), (-4, 2), (-2, 2),
    (-10, 0), (-8, 0), (-6, 0), (-4, 0), (-2, 0),
)

_AND_EDGES = (
    (0, 1),    # upper-left light-red run to the red bolt b
    (0, 5),
    (5, 6),
    (2, 6),    # orange key b above its slot
    (6, 10),   # slot row to the violet gate b
    (9, 10),   # stored blue behind gate b
    (10, 11),
    (11, 12),  # light-blue shuttle between the gates
    (12, 13),  # gate a to the blue port cell
    (7, 12),
    (3, 7),    # orange key a above its slot
    (7, 8),
    (4, 8),    # red bolt a beside its run
)

_AND_COLORS = (
    Color.LIGHT_RED, Color.RED,
    Color.ORANGE, Color.ORANGE, Color.RED,
    Color.LIGHT_RED, Color.LIGHT_RED, Color.LIGHT_RED, Color.LIGHT_RED,
    Color.BLUE, Color.VIOLET, Color.LIGHT_BLUE, Color.VIOLET, Color.LIGHT_BLUE,
)

AND_RED_PORT_CELLS = (1, 4)
AND_BLUE_PORT_CELL = 13
AND_STORED_BLUE_CELL = 9

# Interior pattern after the stored blue has been released through the blue
# port: both red bolts locked in their slots behind the violet gates.
AND_BLUE_SPENT_COLORS = (
    Color.LIGHT_RED, Color.LIGHT_RED,
    Color.RED, Color.RED, Color.LIGHT_RED,
    Color.LIGHT_RED, Color.VIOLET, Color.VIOLET, Color.LIGHT_RED,
    Color.ORANGE, Color.LIGHT_BLUE, Color.ORANGE, Color.LIGHT_BLUE,
    Color.LIGHT_BLUE,
)

# Swap choreography that releases the stored blue toward the blue port,
# locking both red bolts on the way. Used as a legality tripwire for the
# transcription; reachability search never needs it.
AND_BLUE_RELEASE_SWAPS = (
    (0, 1), (0, 5), (5, 6),   # red bolt b travels to the slot row
    (2, 6),                   # bolt b locks, orange key b freed
    (6, 10),                  # key b opens gate b
    (9, 10),                  # stored blue steps out
    (10, 11),                 # and onto the shuttle cell
    (4, 8), (7, 8),           # red bolt a travels over
    (3, 7),                   # bolt a locks, key a freed
    (7, 12),                  # key a opens gate a
    (11, 12),                 # blue crosses gate a
    (12, 13),                 # blue reaches the blue port cell
)


def _make_or_blueprint() -> GadgetBlueprint:
    graph = SimpleGraph.from_edges(5, _OR_EDGES)
    ports = (Port("p0", 0, GadgetKind.BLUE_EDGE),
             Port("p1", 2, GadgetKind.BLUE_EDGE),
             Port("p2", 4, GadgetKind.BLUE_EDGE))
    return GadgetBlueprint(GadgetKind.OR_VERTEX, graph, _OR_COLORS, ports,
                           {}, _OR_GRID)


def _make_and_blueprint() -> GadgetBlueprint:
    graph = SimpleGraph.from_edges(14, _AND_EDGES)
    ports = (Port("red_a", AND_RED_PORT_CELLS[0], GadgetKind.RED_EDGE),
             Port("red_b", AND_RED_PORT_CELLS[1], GadgetKind.RED_EDGE),
             Port("blue", AND_BLUE_PORT_CELL, GadgetKind.BLUE_EDGE))
    return GadgetBlueprint(GadgetKind.AND_VERTEX, graph, _AND_COLORS, ports,
                           {"stored_blue": AND_STORED_BLUE_CELL}, _AND_GRID)


def _make_edge_blueprint(kind: GadgetKind) -> GadgetBlueprint:
    graph = SimpleGraph.from_edges(18, _EDGE_EDGES)
    colors = _BLUE_EDGE_COLORS if kind is GadgetKind.BLUE_EDGE \
        else _rename_red(_BLUE_EDGE_COLORS)
    ports = (Port("left", 8, kind), Port("right", 17, kind))
    return GadgetBlueprint(kind, graph, colors, ports, dict(_EDGE_NAMED),
                           _EDGE_GRID)


_BLUEPRINTS: Dict[GadgetKind, GadgetBlueprint] = {}


def blueprint(kind: GadgetKind) -> GadgetBlueprint:
    """The transcribed blueprint for a gadget kind (cached constant)."""
    kind = GadgetKind(kind)
    if kind not in _BLUEPRINTS:
        if kind in EDGE_KINDS:
            _BLUEPRINTS[kind] = _make_edge_blueprint(kind)
        elif kind is GadgetKind.OR_VERTEX:
            _BLUEPRINTS[kind] = _make_or_blueprint()
        else:
            _BLUEPRINTS[kind] = _make_and_blueprint()
    return _BLUEPRINTS[kind]


def apply_color_swaps(graph: SimpleGraph, colors: Sequence[Color],
                      swaps: Sequence[Tuple[int, int]]) -> Tuple[Color, ...]:
    """Apply cell swaps to a color pattern, checking each step's legality."""
    out = list(colors)
    for a, b in swaps:
        if not graph.has_edge(a, b):
            raise ConstructionError(f"cells {a},{b} are not adjacent")
        if not friendship(out[a], out[b]):
            raise ConstructionError(
                f"{out[a].name} and {out[b].name} are strangers at ({a},{b})")
        out[a], out[b] = out[b], out[a]
    return tuple(out)


def migrated_pattern(bp: GadgetBlueprint, from_port: int = 0) -> Tuple[Color, ...]:
    """Run the full token migration through an edge gadget.

    A heavy token enters at the given port, locks at the near dead end, and
    the stored token leaves through the other port. Every swap is legality
    checked, so a transcription error fails here rather than corrupting
    downstream state. The result equals the mirror image of the input
    placement.
    """
    if bp.kind not in EDGE_KINDS:
        raise InputError("migration is defined for edge gadgets only")
    if from_port not in (0, 1):
        raise InputError("edge gadgets have ports 0 and 1")
    colors = list(bp.initial_colors) if from_port == 0 else \
        [bp.initial_colors[EDGE_MIRROR[i]] for i in range(bp.n_cells)]
    swaps = MIGRATION_FROM_PORT_0 if from_port == 0 else \
        tuple((EDGE_MIRROR[a], EDGE_MIRROR[b]) for a, b in MIGRATION_FROM_PORT_0)
    entry = bp.ports[from_port].location
    exit_ = bp.ports[1 - from_port].location
    if colors[entry] != light_color(bp.kind):
        raise ConstructionError("port corridor cell is not light; cannot enter")
    colors[entry] = heavy_color(bp.kind)
    colors = list(apply_color_swaps(bp.graph, colors, swaps))
    if colors[exit_] != heavy_color(bp.kind):
        raise ConstructionError("migration did not deliver the heavy token")
    colors[exit_] = light_color(bp.kind)
    return tuple(colors)


def mirrored_pattern(bp: GadgetBlueprint) -> Tuple[Color, ...]:
    """Canonical placement pointing toward port 1, generated by migration."""
    return migrated_pattern(bp, from_port=0)


def _skeletons(kind: GadgetKind):
    heavy = heavy_color(kind)
    toward_0 = {0: Color.GREEN, 1: Color.VIOLET, BETA: Color.ORANGE,
                ALPHA: Color.ORANGE, GAMMA: heavy, 14: Color.VIOLET}
    toward_1 = {0: Color.ORANGE, 6: Color.VIOLET, BETA: Color.GREEN,
                11: Color.VIOLET, ALPHA: heavy, GAMMA: Color.ORANGE}
    return toward_0, toward_1


def direction_of(bp: GadgetBlueprint,
                 cell_colors: Sequence[Color]) -> Optional[EdgeDirection]:
    """Classify an edge gadget's pattern by its heavy-token skeleton.

    The anchor cells (green/orange ends, the two violets, and the ALPHA and
    GAMMA dead ends) decide the direction; light tokens in transit through
    the arms do not disturb it. Mid-migration placements return None.
    """
    if bp.kind not in EDGE_KINDS:
        raise InputError("direction is defined for edge gadgets only")
    if len(cell_colors) != bp.n_cells:
        raise InputError(f"expected {bp.n_cells} cell colors")
    toward_0, toward_1 = _skeletons(bp.kind)
    if all(cell_colors[c] == want for c, want in toward_0.items()):
        return EdgeDirection.TOWARD_PORT_0
    if all(cell_colors[c] == want for c, want in toward_1.items()):
        return EdgeDirection.TOWARD_PORT_1
    return None


# -- isolation harness ---------------------------------------------------------


@dataclass(frozen=True)
class Sealed:
    pass


@dataclass(frozen=True)
class Source:
    color: Color


@dataclass(frozen=True)
class Sink:
    pass


def quotient_colors_at(state: Sequence[int],
                       cells: Sequence[int]) -> Tuple[Color, ...]:
    """Colors at cells of a quotient search state (class ids = Color values)."""
    return tuple(Color(state[c]) for c in cells)


def config_colors_at(colors: Sequence[Color], config: Sequence[int],
                     cells: Sequence[int]) -> Tuple[Color, ...]:
    """Colors at cells of a labeled configuration (person ids per cell)."""
    return tuple(Color(colors[config[c]]) for c in cells)


@dataclass(frozen=True)
class HarnessInstance:
    """A blueprint embedded in a closed test instance.

    Gadget cells keep their blueprint numbering; corridor cells follow, in
    port order. sigma is the identity: person i starts at cell i and carries
    colors[i].
    """

    fas: FasInstance
    sigma: Configuration
    colors: Tuple[Color, ...]
    gadget_cells: Tuple[int, ...]
    corridors: Mapping[int, Tuple[int, ...]]
    source_cells: Mapping[int, int]

    @property
    def classing(self) -> ColorClassing:
        return classing_from_colors(self.colors)

    def gadget_colors(self, state: Sequence[int],
                      quotient: bool = True) -> Tuple[Color, ...]:
        """Colors at the gadget cells of a quotient state or configuration."""
        if len(state) != self.fas.order:
            raise InputError("state length does not match the instance")
        if quotient:
            return quotient_colors_at(state, self.gadget_cells)
        return config_colors_at(self.colors, state, self.gadget_cells)


def harness(bp: GadgetBlueprint,
            scenarios: Sequence[object]) -> HarnessInstance:
    """Close every port of a blueprint with a test scenario.

    Sealed removes the port edge. Sink attaches a corridor of CORRIDOR_LEN
    light cells where a released token can exit and park. Source attaches
    the same corridor plus one cell holding the given token behind it.
    """
    if len(scenarios) != len(bp.ports):
        raise InputError(f"{bp.kind.value} has {len(bp.ports)} ports, "
                         f"got {len(scenarios)} scenarios")
    edges: List[Tuple[int, int]] = list(bp.graph.edges)
    colors: List[Color] = list(bp.initial_colors)
    corridors: Dict[int, Tuple[int, ...]] = {}
    source_cells: Dict[int, int] = {}
    nxt = bp.n_cells
    for idx, (port, sc) in enumerate(zip(bp.ports, scenarios)):
        if isinstance(sc, Sealed):
            corridors[idx] = ()
            continue
        if not isinstance(sc, (Source, Sink)):
            raise InputError(f"unknown scenario {sc!r}")
        cells = tuple(range(nxt, nxt + CORRIDOR_LEN))
        nxt += CORRIDOR_LEN
        attach = port.location
        for c in cells:
            edges.append((attach, c))
            colors.append(light_color(port.edge_kind))
            attach = c
        corridors[idx] = cells
        if isinstance(sc, Source):
            edges.append((attach, nxt))
            colors.append(Color(sc.color))
            source_cells[idx] = nxt
            nxt += 1
    graph = SimpleGraph.from_edges(nxt, edges)
    fas = FasInstance(graph, build_people_graph(colors))
    sigma = tuple(range(nxt))
    return HarnessInstance(fas, sigma, tuple(colors), tuple(range(bp.n_cells)),
                           corridors, source_cells)


# -- junction assemblies ---------------------------------------------------------


@dataclass(frozen=True)
class Assembly:
    """A junction gadget with one edge gadget per port, far ends sealed."""

    fas: FasInstance
    sigma: Configuration
    colors: Tuple[Color, ...]
    interior_cells: Tuple[int, ...]
    attached: Tuple[Tuple[GadgetKind, Tuple[int, ...]], ...]

    @property
    def classing(self) -> ColorClassing:
        return classing_from_colors(self.colors)

    def attached_directions(self, state: Sequence[int], quotient: bool = True
                            ) -> Tuple[Optional[EdgeDirection], ...]:
        out = []
        for kind, cells in self.attached:
            pattern = quotient_colors_at(state, cells) if quotient \
                else config_colors_at(self.colors, state, cells)
            out.append(direction_of(blueprint(kind), pattern))
        return tuple(out)


def junction_assembly(kind: GadgetKind) -> Assembly:
    """Assemble a junction gadget with its drawn complement of edge gadgets.

    Each attached edge gadget is wired by its port 0 to the junction and
    left sealed at port 1, so every edge starts out pointing at the
    junction.
    """
    if kind not in VERTEX_KINDS:
        raise InputError("assemblies are built around junction gadgets")
    vbp = blueprint(kind)
    edges: List[Tuple[int, int]] = list(vbp.graph.edges)
    colors: List[Color] = list(vbp.initial_colors)
    attached: List[Tuple[GadgetKind, Tuple[int, ...]]] = []
    nxt = vbp.n_cells
    for port in vbp.ports:
        ebp = blueprint(port.edge_kind)
        cells = tuple(range(nxt, nxt + ebp.n_cells))
        for a, b in ebp.graph.edges:
            edges.append((cells[a], cells[b]))
        colors.extend(ebp.initial_colors)
        edges.append((port.location, cells[ebp.ports[0].location]))
        attached.append((port.edge_kind, cells))
        nxt += ebp.n_cells
    graph = SimpleGraph.from_edges(nxt, edges)
    fas = FasInstance(graph, build_people_graph(colors))
    return Assembly(fas, tuple(range(nxt)), tuple(colors),
                    tuple(range(vbp.n_cells)), tuple(attached))


# -- transcription table ---------------------------------------------------------


def transcription_table() -> dict:
    """Machine-readable dump of every blueprint's cells, colors, and ports."""
    table = {}
    for kind in GadgetKind:
        bp = blueprint(kind)
        named_by_cell = {cell: name for name, cell in bp.named.items()}
        table[kind.value] = {
            "cells": [
                {"cell": i, "x": bp.grid[i][0], "y": bp.grid[i][1],
                 "color": bp.initial_colors[i].name,
                 **({"name": named_by_cell[i]} if i in named_by_cell else {})}
                for i in range(bp.n_cells)
            ],
            "edges": [list(e) for e in bp.graph.edges],
            "ports": [{"name": p.name, "cell": p.location,
                       "edge_kind": p.edge_kind.value} for p in bp.ports],
        }
    return table


def blueprint_dot(kind: GadgetKind) -> str:
    """DOT export with color-filled nodes matching the drawn placement."""
    from .colors import DOT_COLOR

    bp = blueprint(kind)
    fill = {i: DOT_COLOR[c] for i, c in enumerate(bp.initial_colors)}
    labels = {cell: name for name, cell in bp.named.items()}
    for p in bp.ports:
        labels[p.location] = labels.get(p.location, p.name)
    g = SimpleGraph.from_edges(bp.graph.order, bp.graph.edges, labels)
    return g.to_dot(name=kind.value.lower(), fillcolors=fill)
