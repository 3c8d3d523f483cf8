"""Constructors and recognizers for the named cactus families.

A *bundle* is a cactus whose cycles all pass through one shared hub vertex
and whose cut edges are all pendant edges at that hub. The two uniform
bundles (all triangles, all quadrangles) and the quadrangle bundle with one
pendant edge subdivided (the "tailed" variant) are the extremal graphs the
bounds module predicts, so they get dedicated constructors and exact
recognizers here.

Canonical vertex numbering for constructors: hub is 0, cycle vertices follow
in construction order, pendant vertices come last.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InfeasibleError
from .graphs import Graph, cactus_profile, cycle_vertices


@dataclass(frozen=True)
class BundleSpec:
    """Cycle lengths plus pendant count of a bundle."""

    cycle_lengths: tuple[int, ...]
    pendants: int = 0

    def __post_init__(self):
        object.__setattr__(self, "cycle_lengths", tuple(self.cycle_lengths))
        for length in self.cycle_lengths:
            if length < 3:
                raise InfeasibleError(f"cycle length {length} < 3")
        if self.pendants < 0:
            raise InfeasibleError(f"negative pendant count {self.pendants}")

    @property
    def k(self) -> int:
        return len(self.cycle_lengths)

    @property
    def n(self) -> int:
        return 1 + sum(length - 1 for length in self.cycle_lengths) + self.pendants

    @property
    def m(self) -> int:
        return sum(self.cycle_lengths) + self.pendants


def bundle(spec: BundleSpec) -> Graph:
    """Build the bundle described by ``spec``."""
    edges = []
    nxt = 1
    for length in spec.cycle_lengths:
        ring = [0] + list(range(nxt, nxt + length - 1))
        nxt += length - 1
        for i in range(length):
            edges.append((ring[i], ring[(i + 1) % length]))
    for _ in range(spec.pendants):
        edges.append((0, nxt))
        nxt += 1
    return Graph(max(nxt, 1), edges)


def triangle_bundle(n: int, k: int) -> Graph:
    """k triangles at a hub plus n - 2k - 1 hub pendants."""
    if k < 0 or n < 2 * k + 1:
        raise InfeasibleError(f"triangle bundle needs n >= 2k+1, got n={n}, k={k}")
    return bundle(BundleSpec((3,) * k, n - 2 * k - 1))


def quadrangle_bundle(n: int, k: int) -> Graph:
    """k quadrangles at a hub plus n - 3k - 1 hub pendants."""
    if k < 0 or n < 3 * k + 1:
        raise InfeasibleError(f"quadrangle bundle needs n >= 3k+1, got n={n}, k={k}")
    return bundle(BundleSpec((4,) * k, n - 3 * k - 1))


def tailed_quadrangle_bundle(n: int, k: int) -> Graph:
    """Quadrangle bundle on n-1 vertices with one pendant extended to a tail.

    Needs n >= 3k + 3: the bundle on n - 1 vertices has n - 3k - 2 pendants
    and must keep at least one to extend. The result has exactly one cut edge
    that is not pendant, and deleting that edge leaves a single-edge
    component.
    """
    if k < 0 or n < 3 * k + 3:
        raise InfeasibleError(
            f"tailed quadrangle bundle needs n >= 3k+3, got n={n}, k={k}"
        )
    base = quadrangle_bundle(n - 1, k)
    first_pendant = 1 + 3 * k  # lowest-numbered pendant vertex of the base
    return Graph(n, list(base.edges) + [(first_pendant, n - 1)])


def cycle(length: int) -> Graph:
    if length < 3:
        raise InfeasibleError(f"cycle needs length >= 3, got {length}")
    return Graph(length, [(i, (i + 1) % length) for i in range(length)])


def path(n: int) -> Graph:
    if n < 1:
        raise InfeasibleError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    if n < 1:
        raise InfeasibleError(f"star needs n >= 1, got {n}")
    return Graph(n, [(0, i) for i in range(1, n)])


def as_bundle(g: Graph) -> BundleSpec | None:
    """Recognize bundles exactly; returns a BundleSpec (lengths sorted) or None.

    Works at any size: the characterization below is structural, not a
    certificate comparison, so it is not subject to the canonical-form cap.
    """
    profile = cactus_profile(g)
    if not profile.is_cactus:
        return None
    k = profile.k
    if k == 0:
        # Bundles without cycles are stars (K1 and K2 included).
        if g.m == 0:
            return BundleSpec((), 0) if g.n == 1 else None
        centers = [v for v in range(g.n) if g.degree(v) == g.n - 1]
        if g.m == g.n - 1 and centers:
            return BundleSpec((), g.n - 1)
        return None
    rings = [cycle_vertices(c) for c in profile.cycle_edge_sets]
    if k == 1:
        heavy = [v for v in rings[0] if g.degree(v) > 2]
        if len(heavy) > 1:
            return None
        hub = heavy[0] if heavy else next(iter(rings[0]))
    else:
        common = set(rings[0])
        for ring in rings[1:]:
            common &= ring
        if len(common) != 1:
            return None
        hub = next(iter(common))
    # Every non-hub cycle vertex must have degree 2, every other vertex must
    # be a pendant hanging off the hub.
    on_ring = set()
    for ring in rings:
        for v in ring:
            if v != hub and g.degree(v) != 2:
                return None
        on_ring |= ring
    pendants = 0
    for v in range(g.n):
        if v == hub or v in on_ring:
            continue
        if g.degree(v) != 1 or g.adj[v][0] != hub:
            return None
        pendants += 1
    lengths = tuple(sorted(len(ring) for ring in rings))
    return BundleSpec(lengths, pendants)


def is_quadrangle_bundle(g: Graph, k: int | None = None) -> bool:
    spec = as_bundle(g)
    if spec is None:
        return False
    if any(length != 4 for length in spec.cycle_lengths):
        return False
    return k is None or spec.k == k


def is_tailed_quadrangle_bundle(g: Graph, k: int | None = None) -> bool:
    """Exact recognizer for :func:`tailed_quadrangle_bundle` results.

    Peeling the tail's outer leaf must leave a quadrangle bundle in which the
    peeled vertex's neighbor became a hub pendant.
    """
    if g.n < 3:
        return False
    for leaf in range(g.n):
        if g.degree(leaf) != 1:
            continue
        inner = g.adj[leaf][0]
        if g.degree(inner) != 2:
            continue
        keep = [v for v in range(g.n) if v != leaf]
        relabel = {v: i for i, v in enumerate(keep)}
        peeled = Graph(
            g.n - 1,
            [(relabel[u], relabel[v]) for u, v in g.edges if leaf not in (u, v)],
        )
        spec = as_bundle(peeled)
        if spec is None or any(length != 4 for length in spec.cycle_lengths):
            continue
        if spec.pendants == 0:
            continue
        if k is not None and spec.k != k:
            continue
        # The peeled spot must sit on the hub, which as_bundle already
        # guarantees for every pendant; check 'inner' really is one now.
        if peeled.degree(relabel[inner]) == 1:
            return True
    return False
