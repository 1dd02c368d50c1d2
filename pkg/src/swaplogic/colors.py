"""The eight person colors and their friendship relation.

Friendship is symmetric, holds between any two people of the same color, and
holds across colors exactly for the seven pairs listed in FRIEND_PAIRS. The
people graph built from a color sequence is the blow-up of this relation:
each color class becomes a clique, and two classes are completely joined
exactly when the colors are friends.
"""

from __future__ import annotations

import enum
from typing import Sequence, Tuple

from .fas import ColorClassing
from .graphs import SimpleGraph


class Color(enum.IntEnum):
    BLUE = 0
    LIGHT_BLUE = 1
    RED = 2
    LIGHT_RED = 3
    GREEN = 4
    WHITE = 5
    ORANGE = 6
    VIOLET = 7


N_COLORS = 8

FRIEND_PAIRS = frozenset({
    frozenset({Color.LIGHT_BLUE, Color.BLUE}),
    frozenset({Color.BLUE, Color.ORANGE}),
    frozenset({Color.LIGHT_RED, Color.RED}),
    frozenset({Color.RED, Color.ORANGE}),
    frozenset({Color.ORANGE, Color.VIOLET}),
    frozenset({Color.ORANGE, Color.GREEN}),
    frozenset({Color.GREEN, Color.WHITE}),
})

# X11 names used by the DOT exporter.
DOT_COLOR = {
    Color.BLUE: "blue",
    Color.LIGHT_BLUE: "lightblue",
    Color.RED: "red",
    Color.LIGHT_RED: "lightpink",
    Color.GREEN: "green",
    Color.WHITE: "white",
    Color.ORANGE: "orange",
    Color.VIOLET: "violet",
}


def friendship(a: Color, b: Color) -> bool:
    """Symmetric friendship predicate over colors."""
    if a == b:
        return True
    return frozenset({Color(a), Color(b)}) in FRIEND_PAIRS


def build_people_graph(colors: Sequence[Color]) -> SimpleGraph:
    """People graph for a color sequence: i ~ j iff their colors are friends."""
    colors = [Color(c) for c in colors]
    n = len(colors)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if friendship(colors[i], colors[j])]
    return SimpleGraph.from_edges(n, edges)


def classing_from_colors(colors: Sequence[Color]) -> ColorClassing:
    """Quotient classing whose class ids are the Color values themselves."""
    return ColorClassing(tuple(int(Color(c)) for c in colors), N_COLORS)


def color_names(colors: Sequence[Color]) -> Tuple[str, ...]:
    return tuple(Color(c).name for c in colors)


def parse_color(value) -> Color:
    """Accept a Color, its integer value, or its name."""
    if isinstance(value, str):
        try:
            return Color[value]
        except KeyError:
            raise ValueError(f"unknown color name {value!r}") from None
    return Color(value)
