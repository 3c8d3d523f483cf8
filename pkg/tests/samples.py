"""Small named graphs shared across the test files.

Each helper returns a fresh Graph with the construction labeling given here,
so tests can reason about specific vertices and edges.
"""

from __future__ import annotations

from szegedtools import Graph, graph_from_edges

K3_EDGES = [(0, 1), (1, 2), (0, 2)]
C4_EDGES = [(0, 1), (1, 2), (2, 3), (0, 3)]
C5_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
PAW_EDGES = [(0, 1), (1, 2), (0, 2), (0, 3)]
BUTTERFLY_EDGES = [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]
# two triangles whose hubs are joined by a bridge
TWO_TRIANGLES_BRIDGE_EDGES = [
    (0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5), (3, 5),
]
# quadrangle with one pendant on each of two opposite corners
C4_OPPOSITE_EDGES = [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (2, 5)]
# triangle with pendants on two different triangle vertices
TRIANGLE_SPREAD_EDGES = [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]
# triangle and quadrangle sharing vertex 0
TRIANGLE_QUAD_SHARED_EDGES = [
    (0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5), (0, 5),
]


def k3() -> Graph:
    return graph_from_edges(3, K3_EDGES)


def c4() -> Graph:
    return graph_from_edges(4, C4_EDGES)


def c5() -> Graph:
    return graph_from_edges(5, C5_EDGES)


def paw() -> Graph:
    return graph_from_edges(4, PAW_EDGES)


def butterfly() -> Graph:
    return graph_from_edges(5, BUTTERFLY_EDGES)


def two_triangles_bridge() -> Graph:
    return graph_from_edges(6, TWO_TRIANGLES_BRIDGE_EDGES)


def c4_opposite() -> Graph:
    return graph_from_edges(6, C4_OPPOSITE_EDGES)


def triangle_spread() -> Graph:
    return graph_from_edges(5, TRIANGLE_SPREAD_EDGES)


def triangle_quad_shared() -> Graph:
    return graph_from_edges(6, TRIANGLE_QUAD_SHARED_EDGES)


def diamond() -> Graph:
    """K4 minus an edge; two triangles sharing an edge, so not a cactus."""
    return graph_from_edges(4, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3)])


def k4() -> Graph:
    return graph_from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
