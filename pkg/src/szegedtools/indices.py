"""Distance-based graph invariants in exact arithmetic.

The edge revised Szeged index sums, over every edge e = uv, the product
(m_u + m_0/2)(m_v + m_0/2), where m_u counts the edges strictly closer to u
than to v, m_v the edges strictly closer to v, and m_0 the rest (the edge e
itself always lands in m_0). Every value is therefore an integer number of
quarters, and :class:`QuarterInt` keeps it that way; no floating point enters
any computation here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidGraphError
from .graphs import Graph, all_bfs_distances, bfs_distances, require_connected


class QuarterInt:
    """Exact multiple of 1/4, stored as the integer numerator over 4."""

    __slots__ = ("num",)

    def __init__(self, num: int):
        if not isinstance(num, int):
            raise TypeError(f"QuarterInt numerator must be int, got {type(num)!r}")
        object.__setattr__(self, "num", num)

    def __setattr__(self, name, value):
        raise AttributeError("QuarterInt is immutable")

    @classmethod
    def from_int(cls, value: int) -> "QuarterInt":
        return cls(4 * value)

    def _coerce(self, other) -> "QuarterInt | None":
        if isinstance(other, QuarterInt):
            return other
        if isinstance(other, int):
            return QuarterInt(4 * other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else QuarterInt(self.num + o.num)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else QuarterInt(self.num - o.num)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else QuarterInt(o.num - self.num)

    def __mul__(self, other):
        if isinstance(other, int):
            return QuarterInt(self.num * other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self):
        return QuarterInt(-self.num)

    def _cmp_key(self, other):
        o = self._coerce(other)
        return None if o is None else o.num

    def __eq__(self, other):
        key = self._cmp_key(other)
        return NotImplemented if key is None else self.num == key

    def __lt__(self, other):
        key = self._cmp_key(other)
        return NotImplemented if key is None else self.num < key

    def __le__(self, other):
        key = self._cmp_key(other)
        return NotImplemented if key is None else self.num <= key

    def __gt__(self, other):
        key = self._cmp_key(other)
        return NotImplemented if key is None else self.num > key

    def __ge__(self, other):
        key = self._cmp_key(other)
        return NotImplemented if key is None else self.num >= key

    def __hash__(self):
        return hash(Fraction(self.num, 4))

    @property
    def is_integer(self) -> bool:
        return self.num % 4 == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, 4)

    def as_decimal(self) -> str:
        """Exact decimal rendering; quarters terminate after two places."""
        whole, rem = divmod(abs(self.num), 4)
        sign = "-" if self.num < 0 else ""
        frac = {0: "", 1: ".25", 2: ".5", 3: ".75"}[rem]
        return f"{sign}{whole}{frac}"

    def to_dict(self) -> dict:
        return {"num": self.num, "den": 4}

    def __str__(self):
        return f"{self.num}/4"

    def __repr__(self):
        return f"QuarterInt({self.num})"


@dataclass(frozen=True)
class VertexPartition:
    """Vertex counts (closer to u, closer to v, equidistant) for an edge uv."""

    n_u: int
    n_v: int
    n_0: int


@dataclass(frozen=True)
class EdgePartition:
    """Edge counts (closer to u, closer to v, equidistant) for an edge uv.

    Edge-to-vertex distance is the smaller endpoint distance; the edge uv
    itself is equidistant by construction, so ``m_0 >= 1``.
    """

    m_u: int
    m_v: int
    m_0: int


def _check_oriented_edge(g: Graph, e) -> tuple[int, int]:
    u, v = e
    if not g.has_edge(u, v):
        raise InvalidGraphError(f"({u}, {v}) is not an edge of the graph")
    return u, v


def vertex_partition(g: Graph, e) -> VertexPartition:
    """Classify every vertex by which endpoint of ``e`` it is closer to."""
    require_connected(g)
    u, v = _check_oriented_edge(g, e)
    du = bfs_distances(g, u)
    dv = bfs_distances(g, v)
    n_u = n_v = n_0 = 0
    for w in range(g.n):
        if du[w] < dv[w]:
            n_u += 1
        elif dv[w] < du[w]:
            n_v += 1
        else:
            n_0 += 1
    return VertexPartition(n_u, n_v, n_0)


def _edge_split(edges, du, dv) -> EdgePartition:
    m_u = m_v = m_0 = 0
    for x, y in edges:
        a, b = du[x], du[y]
        fu = a if a < b else b
        a, b = dv[x], dv[y]
        fv = a if a < b else b
        if fu < fv:
            m_u += 1
        elif fv < fu:
            m_v += 1
        else:
            m_0 += 1
    return EdgePartition(m_u, m_v, m_0)


def edge_partition(g: Graph, e) -> EdgePartition:
    """Classify every edge by which endpoint of ``e`` it is closer to."""
    require_connected(g)
    u, v = _check_oriented_edge(g, e)
    return _edge_split(g.edges, bfs_distances(g, u), bfs_distances(g, v))


def edge_partitions(g: Graph) -> list[EdgePartition]:
    """Edge partition for every edge of ``g``, in ``g.edges`` order."""
    require_connected(g)
    dist = all_bfs_distances(g)
    return [_edge_split(g.edges, dist[u], dist[v]) for u, v in g.edges]


def wiener(g: Graph) -> int:
    """Sum of distances over unordered vertex pairs."""
    require_connected(g)
    total = 0
    for s in range(g.n):
        ds = bfs_distances(g, s)
        for t in range(s + 1, g.n):
            total += ds[t]
    return total


def szeged(g: Graph) -> int:
    """Sum over edges of n_u * n_v (vertex-partition product)."""
    require_connected(g)
    dist = all_bfs_distances(g)
    total = 0
    for u, v in g.edges:
        du, dv = dist[u], dist[v]
        n_u = n_v = 0
        for w in range(g.n):
            if du[w] < dv[w]:
                n_u += 1
            elif dv[w] < du[w]:
                n_v += 1
        total += n_u * n_v
    return total


def edge_revised_szeged(g: Graph) -> QuarterInt:
    """Sum over edges of (m_u + m_0/2)(m_v + m_0/2), exactly."""
    quarters = 0
    for p in edge_partitions(g):
        quarters += (2 * p.m_u + p.m_0) * (2 * p.m_v + p.m_0)
    return QuarterInt(quarters)


def diff_square_sum(g: Graph) -> int:
    """Sum over edges of (m_u - m_v)^2."""
    return sum((p.m_u - p.m_v) ** 2 for p in edge_partitions(g))
