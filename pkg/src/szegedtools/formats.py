"""Text encodings: graph6 (short form) and a plain edge-list format.

graph6 short form covers n <= 62: one header byte ``n + 63`` followed by the
upper triangle of the adjacency matrix in column-major order, packed six bits
per byte (each byte offset by 63). Parsing is strict: bad characters,
truncated or oversized payloads, and nonzero padding bits are all rejected
with the byte offset of the problem.

The edge-list format is one ``n m`` line followed by ``m`` lines ``u v``.
"""

from __future__ import annotations

from .errors import FormatError, InvalidGraphError
from .graphs import Graph

_G6_MAX_N = 62


def _payload_len(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (optional ``>>graph6<<`` header allowed)."""
    base = 0
    if text.startswith(">>graph6<<"):
        base = len(">>graph6<<")
        text = text[base:]
    text = text.rstrip("\n")
    if not text:
        raise FormatError("empty graph6 string", base)
    head = ord(text[0])
    if head == 126:
        raise FormatError("long-form graph6 (n > 62) not supported", base)
    if not 63 <= head <= 125:
        raise FormatError(f"bad graph6 header byte {head!r}", base)
    n = head - 63
    if n < 1:
        raise FormatError("graph6 with zero vertices not supported", base)
    want = _payload_len(n)
    body = text[1:]
    if len(body) < want:
        raise FormatError(
            f"truncated graph6 payload: expected {want} bytes, got {len(body)}",
            base + 1 + len(body),
        )
    if len(body) > want:
        raise FormatError(
            f"oversized graph6 payload: expected {want} bytes", base + 1 + want
        )
    bits = []
    for i, ch in enumerate(body):
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise FormatError(f"bad graph6 payload byte {ch!r}", base + 1 + i)
        for shift in range(5, -1, -1):
            bits.append((val >> shift) & 1)
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    for j in range(idx, len(bits)):
        if bits[j]:
            raise FormatError("nonzero padding bits", base + 1 + j // 6)
    return Graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 short-form string."""
    if g.n > _G6_MAX_N:
        raise FormatError(f"graph6 short form limited to n <= {_G6_MAX_N}")
    bits = []
    eset = g.edge_set
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if (u, v) in eset else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Decode the ``n m`` / ``u v`` line format."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise FormatError("empty edge list")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError(f"expected 'n m' header, got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(f"expected integers in header, got {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise FormatError(f"header says {m} edges, found {len(lines) - 1} lines")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise FormatError(f"expected 'u v' line, got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"expected integer endpoints, got {ln!r}") from None
    try:
        return Graph(n, edges)
    except InvalidGraphError as exc:
        raise FormatError(str(exc)) from None


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
