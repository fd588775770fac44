"""Breadth-first distances, eccentricities and deterministic shortest paths."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .errors import DisconnectedError, PreconditionError
from .graph import Graph

__all__ = [
    "UNREACHABLE",
    "DistanceMatrix",
    "PathWitness",
    "RadiusDiameter",
    "bfs_distances",
    "all_pairs",
    "radius_diameter",
    "shortest_path",
]

#: Sentinel for "no path".  Negative so it can never pass for a real distance.
UNREACHABLE = -1


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distance from ``source`` to every vertex (``UNREACHABLE`` if none)."""
    if not 0 <= source < g.n:
        raise IndexError(f"source {source} out of range for n={g.n}")
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adjacency
    while queue:
        v = queue.popleft()
        dv = dist[v] + 1
        for w in adj[v]:
            if dist[w] == UNREACHABLE:
                dist[w] = dv
                queue.append(w)
    return dist


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    dist: tuple[tuple[int, ...], ...]

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        return self.dist[u][v]

    def row(self, v: int) -> tuple[int, ...]:
        return self.dist[v]

    @property
    def connected(self) -> bool:
        return self.n > 0 and all(d != UNREACHABLE for d in self.dist[0])

    def eccentricity(self, v: int) -> int:
        """Eccentricity of ``v`` inside its own component."""
        return max(self.dist[v])

    def ball(self, v: int, r: int) -> list[int]:
        """Vertices at distance at most ``r`` from ``v``."""
        return [u for u, d in enumerate(self.dist[v]) if 0 <= d <= r]

    def max_distance(self) -> int:
        """Largest finite entry (0 for graphs without edges)."""
        return max((max(row) for row in self.dist), default=0)

    def as_array(self):
        import numpy as np

        return np.array(self.dist, dtype=np.int64).reshape(self.n, self.n)


def all_pairs(g: Graph) -> DistanceMatrix:
    """All-pairs distances by one BFS per vertex."""
    return DistanceMatrix(g.n, tuple(tuple(bfs_distances(g, s)) for s in range(g.n)))


class RadiusDiameter(NamedTuple):
    radius: int
    diameter: int
    center: int
    diametral_pair: tuple[int, int]


def radius_diameter(dm: DistanceMatrix) -> RadiusDiameter:
    """Radius, diameter and witnesses of a connected graph.

    Ties go to the smallest vertex index, then the smallest partner index.
    """
    if dm.n == 0:
        raise DisconnectedError("empty graph has no radius")
    if not dm.connected:
        raise DisconnectedError("graph is disconnected")
    ecc = [max(row) for row in dm.dist]
    radius = min(ecc)
    diameter = max(ecc)
    center = ecc.index(radius)
    a = ecc.index(diameter)
    b = dm.dist[a].index(diameter)
    return RadiusDiameter(radius, diameter, center, (a, b))


@dataclass(frozen=True)
class PathWitness:
    """An ordered vertex sequence meant to be a shortest path."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def __len__(self) -> int:
        return len(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def __iter__(self):
        return iter(self.vertices)

    def is_isometric(self, dm: DistanceMatrix) -> bool:
        """Consecutive hops are edges and the endpoints are ``length`` apart."""
        vs = self.vertices
        if not vs or len(set(vs)) != len(vs):
            return False
        if any(dm.dist[a][b] != 1 for a, b in zip(vs, vs[1:])):
            return False
        return dm.dist[vs[0]][vs[-1]] == len(vs) - 1

    def require_isometric(self, dm: DistanceMatrix) -> None:
        if not self.is_isometric(dm):
            raise PreconditionError(f"path {list(self.vertices)} is not isometric")


def shortest_path(g: Graph, u: int, v: int, dist_from_u: Sequence[int] | None = None) -> PathWitness:
    """Deterministic shortest ``u``-``v`` path.

    Walking back from ``v``, each step moves to the smallest-index neighbour
    one BFS level closer to ``u``.
    """
    dist = dist_from_u if dist_from_u is not None else bfs_distances(g, u)
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    if dist[v] == UNREACHABLE:
        raise DisconnectedError(f"{v} is unreachable from {u}")
    path = [v]
    cur = v
    while cur != u:
        want = dist[cur] - 1
        cur = next(w for w in g.adjacency[cur] if dist[w] == want)
        path.append(cur)
    path.reverse()
    return PathWitness(tuple(path))
