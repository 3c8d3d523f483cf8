"""Small immutable undirected graphs and the structural passes used everywhere.

Vertices are ``0 .. n-1``. Edges are stored as sorted ``(u, v)`` tuples with
``u < v``; the edge list itself is sorted, so two Graph objects compare equal
exactly when they are the same labeled graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DisconnectedError, InvalidGraphError


class Graph:
    """Immutable simple undirected graph."""

    __slots__ = ("n", "edges", "adj", "edge_set", "_cert")

    def __init__(self, n: int, edges):
        if n < 1:
            raise InvalidGraphError(f"need at least one vertex, got n={n}")
        seen = set()
        norm = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidGraphError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise InvalidGraphError(f"duplicate edge ({u}, {v})")
            seen.add((u, v))
            norm.append((u, v))
        norm.sort()
        adj = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "edge_set", frozenset(norm))
        object.__setattr__(self, "_cert", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_set

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def graph_from_edges(n: int, edges) -> Graph:
    """Build a validated Graph from an iterable of vertex pairs."""
    return Graph(n, edges)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from ``source`` to every vertex; unreachable vertices get -1."""
    if not (0 <= source < g.n):
        raise InvalidGraphError(f"source {source} out of range")
    dist = [-1] * g.n
    dist[source] = 0
    queue = [source]
    for u in queue:
        du = dist[u] + 1
        for w in g.adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def all_bfs_distances(g: Graph) -> list[list[int]]:
    return [bfs_distances(g, s) for s in range(g.n)]


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    return all(d >= 0 for d in bfs_distances(g, 0))


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedError("graph is not connected")


@dataclass(frozen=True)
class BlockDecomposition:
    """Biconnected components of a connected graph.

    ``blocks`` holds one frozenset of edges per block; ``kinds`` labels each
    block ``"edge"``, ``"cycle"`` or ``"other"``; ``bridges`` repeats the
    single-edge blocks for convenience.
    """

    blocks: tuple[frozenset[tuple[int, int]], ...]
    kinds: tuple[str, ...]
    bridges: frozenset[tuple[int, int]]


def _block_kind(block: frozenset[tuple[int, int]]) -> str:
    if len(block) == 1:
        return "edge"
    verts = set()
    for u, v in block:
        verts.add(u)
        verts.add(v)
    # A block is a cycle exactly when it has as many vertices as edges and
    # every vertex meets exactly two block edges.
    if len(verts) != len(block):
        return "other"
    deg = dict.fromkeys(verts, 0)
    for u, v in block:
        deg[u] += 1
        deg[v] += 1
    return "cycle" if all(d == 2 for d in deg.values()) else "other"


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Split ``g`` into biconnected components.

    Iterative low-point search with an explicit edge stack; blocks pop when a
    child's low point reaches back no further than its parent.
    """
    require_connected(g)
    disc = [-1] * g.n
    low = [0] * g.n
    counter = 0
    edge_stack: list[tuple[int, int]] = []
    blocks: list[frozenset[tuple[int, int]]] = []

    disc[0] = low[0] = counter
    counter += 1
    work = [(0, -1, iter(g.adj[0]))]
    while work:
        v, parent, it = work[-1]
        advanced = False
        for w in it:
            if disc[w] < 0:
                edge_stack.append((v, w) if v < w else (w, v))
                disc[w] = low[w] = counter
                counter += 1
                work.append((w, v, iter(g.adj[w])))
                advanced = True
                break
            if w == parent:
                continue
            if disc[w] < disc[v]:
                # Back edge; simple graphs see each one exactly once here.
                edge_stack.append((v, w) if v < w else (w, v))
                if disc[w] < low[v]:
                    low[v] = disc[w]
        if not advanced:
            work.pop()
            if parent >= 0:
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if low[v] >= disc[parent]:
                    block = []
                    tree_edge = (parent, v) if parent < v else (v, parent)
                    while edge_stack:
                        e = edge_stack.pop()
                        block.append(e)
                        if e == tree_edge:
                            break
                    blocks.append(frozenset(block))
    kinds = tuple(_block_kind(b) for b in blocks)
    bridges = frozenset(
        next(iter(b)) for b, kind in zip(blocks, kinds) if kind == "edge"
    )
    return BlockDecomposition(tuple(blocks), kinds, bridges)


def cut_edges(g: Graph) -> frozenset[tuple[int, int]]:
    """All bridges of ``g``."""
    return block_decomposition(g).bridges


@dataclass(frozen=True)
class CactusProfile:
    """Cycle structure summary produced by :func:`cactus_profile`."""

    is_cactus: bool
    cycle_edge_sets: tuple[frozenset[tuple[int, int]], ...]
    end_block_flags: tuple[bool, ...]

    @property
    def k(self) -> int:
        return len(self.cycle_edge_sets)

    @property
    def cycle_lengths(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycle_edge_sets))


def cycle_vertices(block: frozenset[tuple[int, int]]) -> frozenset[int]:
    verts = set()
    for u, v in block:
        verts.add(u)
        verts.add(v)
    return frozenset(verts)


def cactus_profile(g: Graph) -> CactusProfile:
    """Classify ``g``'s blocks and flag which cycles are end blocks.

    A graph is a cactus when every block is a single edge or a cycle. A cycle
    is an end block when all but at most one of its vertices have degree 2 in
    the whole graph.
    """
    dec = block_decomposition(g)
    ok = all(kind in ("edge", "cycle") for kind in dec.kinds)
    cycles = tuple(b for b, kind in zip(dec.blocks, dec.kinds) if kind == "cycle")
    flags = tuple(
        sum(1 for v in cycle_vertices(c) if g.degree(v) != 2) <= 1 for c in cycles
    )
    return CactusProfile(ok, cycles, flags)


def is_cactus(g: Graph) -> bool:
    return cactus_profile(g).is_cactus
