"""Simple undirected graphs on dense integer vertices, plus text formats.

Two interchange formats are supported:

* edge lists: one ``u v`` pair per line, optional ``n <count>`` header,
  ``#`` comments and blank lines ignored;
* graph6: the printable 6-bit encoding used by nauty/geng.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import FormatError, GraphValidationError, ParseError

__all__ = [
    "Graph",
    "parse_edge_list",
    "format_edge_list",
    "parse_graph6",
    "encode_graph6",
    "connected_components",
    "is_connected",
]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``.  Use
    :meth:`from_edges` to build one; the raw constructor validates too.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphValidationError(f"negative vertex count {self.n}")
        if len(self.adjacency) != self.n:
            raise GraphValidationError("adjacency length does not match n")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphValidationError(f"adjacency of {v} not sorted/unique")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphValidationError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise GraphValidationError(f"self-loop at {v}")
                if v not in self.adjacency[u]:
                    raise GraphValidationError(f"edge {v}-{u} not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph, rejecting self-loops, duplicates and bad indices."""
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphValidationError(f"self-loop at {u}")
            if v in nbrs[u]:
                raise GraphValidationError(f"duplicate edge {u}-{v}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, tuple(() for _ in range(n)))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield (u, v)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def induced_subgraph(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Subgraph induced on ``vertices``; also returns new->old index map."""
        old = sorted(set(vertices))
        new_of = {v: i for i, v in enumerate(old)}
        edges = [(new_of[u], new_of[v]) for u, v in self.edges() if u in new_of and v in new_of]
        return Graph.from_edges(len(old), edges), old

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


# -- edge lists ---------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated ``u v`` lines into a :class:`Graph`.

    An ``n <count>`` line fixes the vertex count (needed for isolated
    trailing vertices); otherwise ``n`` is one more than the largest index.
    """
    declared_n = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError(f"bad header {raw!r}", lineno)
            if declared_n is not None or edges:
                raise ParseError("header must come before edges and appear once", lineno)
            declared_n = int(parts[1])
            continue
        if len(parts) != 2 or not (parts[0].isdigit() and parts[1].isdigit()):
            raise ParseError(f"expected 'u v', got {raw!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphValidationError(f"line {lineno}: self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphValidationError(f"line {lineno}: duplicate edge {u}-{v}")
        seen.add(key)
        edges.append(key)
    top = 1 + max((max(e) for e in edges), default=-1)
    if declared_n is None:
        n = top
    elif declared_n < top:
        raise GraphValidationError(f"header n={declared_n} but edge uses vertex {top - 1}")
    else:
        n = declared_n
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# -- graph6 -------------------------------------------------------------------

_G6_HEADER = b">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 68719476736:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise FormatError(f"graph too large for graph6: n={n}")


def encode_graph6(g: Graph) -> bytes:
    """Encode ``g`` as graph6 bytes (no header, no trailing newline)."""
    n = g.n
    out = bytearray(_encode_n(n))
    acc = 0
    nbits = 0
    # Upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in range(1, n):
        nbrs = g.adjacency[j]
        for i in range(j):
            acc = (acc << 1) | (i in nbrs)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def _decode_n(data: bytes) -> tuple[int, int]:
    if not data:
        raise FormatError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise FormatError("truncated graph6 size field")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise FormatError("truncated graph6 size field")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def parse_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 record.

    Leading ``>>graph6<<`` and surrounding whitespace are tolerated.
    Padding bits must be zero, so decoding followed by
    :func:`encode_graph6` reproduces the input exactly.
    """
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise FormatError(f"byte {b} at offset {pos} outside [63,126]")
    n, offset = _decode_n(data)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[offset:]
    if len(body) < nbytes:
        raise FormatError(f"truncated graph6 bit stream: need {nbytes} bytes, got {len(body)}")
    if len(body) > nbytes:
        raise FormatError(f"trailing bytes after graph6 bit stream ({len(body) - nbytes})")
    edges = []
    bit = 0
    vals = [b - 63 for b in body]
    for j in range(1, n):
        for i in range(j):
            if (vals[bit // 6] >> (5 - bit % 6)) & 1:
                edges.append((i, j))
            bit += 1
    if nbits % 6 and vals[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise FormatError("non-zero padding bits")
    return Graph.from_edges(n, edges)


# -- components ---------------------------------------------------------------


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1
