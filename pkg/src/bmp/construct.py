"""Constructive multipackings from long shortest paths.

The building block is "every third vertex of a shortest path": any ball of
radius ``r`` meets a shortest path in a stretch of at most ``2r + 1``
vertices, hence in at most ``ceil((2r+1)/3) <= r`` selected vertices.

A diametral path alone gives ``ceil((d+1)/3)`` vertices.  The two-path
construction does better when the radius is large: take a shortest path of
length ``6k`` with middle vertex ``x`` and a second shortest path from ``x``
of length ``3k + 3k'`` (``1 <= k' <= k``).  Every third vertex of the first
path plus every third vertex of the second, starting ``3k + 6`` away from
``x``, is a multipacking of size ``2k + k'``.  Choosing ``k`` and ``k'`` from
the diameter ``d`` and radius ``r`` yields at least
``d/6 + r/3 - 3/2`` vertices, which is at least ``(rad - 3) / 2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .certify import Multipacking, PackingBuilder, verify_multipacking
from .distance import (
    DistanceMatrix,
    PathWitness,
    all_pairs,
    bfs_distances,
    radius_diameter,
    shortest_path,
)
from .errors import DisconnectedError, PreconditionError
from .graph import Graph

__all__ = [
    "Configuration",
    "ConstructionTrace",
    "third_vertex_packing",
    "diametral_packing",
    "theorem2_construct",
    "make_configuration",
    "find_configuration",
    "approx_multipacking",
    "diam_rad_bound",
]


def diam_rad_bound(diameter: int, radius: int) -> int:
    """``max(1, ceil(d/6 + r/3 - 3/2))`` in exact integer arithmetic."""
    return max(1, -(-(diameter + 2 * radius - 9) // 6))


def third_vertex_packing(dm: DistanceMatrix, path: PathWitness) -> Multipacking:
    """Every third vertex of a shortest path, starting at its first vertex."""
    path.require_isometric(dm)
    return Multipacking(path.vertices[::3])


def diametral_packing(g: Graph, dm: DistanceMatrix | None = None) -> tuple[Multipacking, PathWitness]:
    """Every third vertex of the deterministic diametral path; size ``ceil((d+1)/3)``."""
    dm = dm if dm is not None else all_pairs(g)
    a, b = radius_diameter(dm).diametral_pair
    p = shortest_path(g, a, b, dm.dist[a])
    return third_vertex_packing(dm, p), p


@dataclass(frozen=True)
class Configuration:
    """Four vertices and two shortest paths feeding the two-path construction.

    ``path_uv`` runs from ``u`` to ``v`` through ``x`` at position ``3k``;
    ``path_xy`` runs from ``x`` to ``y``.  ``raw_k_prime`` is the value before
    clamping into ``[0, k]``, so ``beta`` may exceed 2 when clamping bit.
    """

    x: int
    y: int
    u: int
    v: int
    k: int
    k_prime: int
    alpha: int
    beta: int
    path_uv: PathWitness
    path_xy: PathWitness
    raw_k_prime: int | None = None

    def to_json(self) -> dict:
        return {
            "x": self.x, "y": self.y, "u": self.u, "v": self.v,
            "k": self.k, "k_prime": self.k_prime, "raw_k_prime": self.raw_k_prime,
            "alpha": self.alpha, "beta": self.beta,
            "path_uv": list(self.path_uv.vertices), "path_xy": list(self.path_xy.vertices),
        }


@dataclass
class ConstructionTrace:
    """How a multipacking was assembled.

    ``mode`` is ``"two-path"`` (both paths), ``"spine"`` (the ``6k`` path
    only, used when ``k' = 0``) or ``"diametral"`` (every third vertex of a
    diametral path).  ``guarantee`` is the size promised by the mode;
    ``target`` is the diameter/radius lower bound; ``extension`` lists
    vertices added greedily afterwards.
    """

    mode: str
    p1: list[int]
    p2: list[int]
    fallback_used: bool
    guarantee: int
    k: int = 0
    k_prime: int = 0
    alpha: int = 0
    beta: int = 0
    radius: int = 0
    diameter: int = 0
    target: int = 1
    extension: list[int] = field(default_factory=list)

    @property
    def members(self) -> list[int]:
        return sorted(set(self.p1) | set(self.p2) | set(self.extension))

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "P1": list(self.p1),
            "P2": list(self.p2),
            "extension": list(self.extension),
            "k": self.k,
            "k_prime": self.k_prime,
            "alpha": self.alpha,
            "beta": self.beta,
            "radius": self.radius,
            "diameter": self.diameter,
            "fallback": self.fallback_used,
            "guarantee": self.guarantee,
            "target": self.target,
        }


def _check_configuration(dm: DistanceMatrix, cfg: Configuration) -> None:
    k, kp = cfg.k, cfg.k_prime
    D = dm.dist
    checks = [
        ("d(x,u) = 3k", D[cfg.x][cfg.u], 3 * k),
        ("d(x,v) = 3k", D[cfg.x][cfg.v], 3 * k),
        ("d(u,v) = 6k", D[cfg.u][cfg.v], 6 * k),
        ("d(x,y) = 3k+3k'", D[cfg.x][cfg.y], 3 * k + 3 * kp),
    ]
    for name, got, want in checks:
        if got != want:
            raise PreconditionError(f"{name} fails: distance is {got}, need {want}")
    puv, pxy = cfg.path_uv, cfg.path_xy
    if puv.length != 6 * k or puv[0] != cfg.u or puv[-1] != cfg.v or puv[3 * k] != cfg.x:
        raise PreconditionError("path_uv must run u -> x -> v with x at position 3k and length 6k")
    if pxy.length != 3 * k + 3 * kp or pxy[0] != cfg.x or pxy[-1] != cfg.y:
        raise PreconditionError("path_xy must run x -> y with length 3k+3k'")
    puv.require_isometric(dm)
    pxy.require_isometric(dm)


def make_configuration(
    g: Graph, x: int, y: int, u: int, v: int, k: int, k_prime: int, dm: DistanceMatrix | None = None
) -> Configuration:
    """Assemble a :class:`Configuration` from four chosen vertices.

    Paths are the deterministic shortest paths ``u -> x``, ``x -> v`` and
    ``x -> y``.  Raises :class:`PreconditionError` if a distance is off.
    """
    dm = dm if dm is not None else all_pairs(g)
    from_x = dm.dist[x]
    ux = shortest_path(g, u, x, dm.dist[u]).vertices
    xv = shortest_path(g, x, v, from_x).vertices
    cfg = Configuration(
        x=x, y=y, u=u, v=v, k=k, k_prime=k_prime, alpha=0, beta=0,
        path_uv=PathWitness(ux + xv[1:]),
        path_xy=shortest_path(g, x, y, from_x),
        raw_k_prime=k_prime,
    )
    _check_configuration(dm, cfg)
    return cfg


def theorem2_construct(dm: DistanceMatrix, cfg: Configuration) -> ConstructionTrace:
    """Two-path multipacking of size exactly ``2k + k'``.

    ``P1`` takes every third vertex of ``path_uv`` (``2k + 1`` of them,
    including ``x``).  ``P2`` takes ``path_xy[3k + 6], path_xy[3k + 9], ...``
    up to ``path_xy[3k + 3k']`` (``k' - 1`` vertices).
    """
    k, kp = cfg.k, cfg.k_prime
    if k < 1 or not 1 <= kp <= k:
        raise PreconditionError(f"need k >= 1 and 1 <= k' <= k, got k={k}, k'={kp}")
    _check_configuration(dm, cfg)
    p1 = list(cfg.path_uv.vertices[::3])
    p2 = [cfg.path_xy[3 * k + 3 * (i + 2)] for i in range(kp - 1)]
    if set(p1) & set(p2):
        raise AssertionError("P1 and P2 intersect")  # impossible: distances from x differ
    return ConstructionTrace(
        mode="two-path", p1=p1, p2=p2, fallback_used=False, guarantee=2 * k + kp,
        k=k, k_prime=kp, alpha=cfg.alpha, beta=cfg.beta,
    )


def find_configuration(g: Graph, dm: DistanceMatrix | None = None) -> Configuration | None:
    """Pick ``k, k'`` from diameter and radius and locate ``x, y, u, v``.

    ``d = 6k + alpha`` and ``r = 3k + 3k' + beta``; ``k'`` is clamped into
    ``[0, k]``.  Returns ``None`` when ``k = 0`` (diameter below 6), in which
    case callers fall back to the diametral packing.

    ``u, v`` are the ends of the first ``6k`` edges of the deterministic
    diametral path and ``x`` is its middle.  ``y`` lies ``3k + 3k'`` along
    the shortest path from ``x`` to its smallest-index eccentric vertex.
    """
    dm = dm if dm is not None else all_pairs(g)
    radius, diameter, _, (a, b) = radius_diameter(dm)
    k, alpha = divmod(diameter, 6)
    if k == 0:
        return None
    raw = (radius - 3 * k) // 3
    kp = max(0, min(raw, k))
    beta = radius - 3 * k - 3 * kp
    diam_path = shortest_path(g, a, b, dm.dist[a])
    spine = PathWitness(diam_path.vertices[: 6 * k + 1])
    u, x, v = spine[0], spine[3 * k], spine[6 * k]
    from_x = dm.dist[x]
    ecc_x = max(from_x)
    target = from_x.index(ecc_x)
    to_target = shortest_path(g, x, target, from_x)
    path_xy = PathWitness(to_target.vertices[: 3 * k + 3 * kp + 1])
    cfg = Configuration(
        x=x, y=path_xy[-1], u=u, v=v, k=k, k_prime=kp, alpha=alpha, beta=beta,
        path_uv=spine, path_xy=path_xy, raw_k_prime=raw,
    )
    _check_configuration(dm, cfg)
    return cfg


def _extend(dm: DistanceMatrix, members: list[int]) -> list[int]:
    """Greedily add vertices, farthest-from-center first, while still valid."""
    builder = PackingBuilder(dm)
    for m in members:
        builder.add(m)
    ecc = [max(row) for row in dm.dist]
    added = []
    present = set(members)
    for c in sorted(range(dm.n), key=lambda w: (-ecc[w], w)):
        if c not in present and builder.can_add(c):
            builder.add(c)
            added.append(c)
    return added


def approx_multipacking(
    g: Graph, dm: DistanceMatrix | None = None, extend: bool = True
) -> tuple[Multipacking, ConstructionTrace]:
    """Polynomial-time multipacking of size at least ``(mp - 3) / 2``.

    Dispatch on the configuration: two paths when ``k, k' >= 1``; the ``6k``
    spine alone when ``k' = 0``; a diametral path when ``k = 0``.  If the
    diametral packing is strictly larger than the chosen construction it is
    used instead.  With ``extend`` the result is then grown greedily, which
    never shrinks it and keeps it valid.
    """
    if g.n == 0:
        raise DisconnectedError("empty graph")
    dm = dm if dm is not None else all_pairs(g)
    if not dm.connected:
        raise DisconnectedError("approx_multipacking needs a connected graph")
    radius, diameter, _, _ = radius_diameter(dm)
    cfg = find_configuration(g, dm)
    diam_p, diam_path = diametral_packing(g, dm)
    diam_trace = ConstructionTrace(
        mode="diametral", p1=list(diam_path.vertices[::3]), p2=[],
        fallback_used=True, guarantee=len(diam_p),
    )
    if cfg is None:
        trace = diam_trace
    elif cfg.k_prime >= 1:
        trace = theorem2_construct(dm, cfg)
    else:
        trace = ConstructionTrace(
            mode="spine", p1=list(cfg.path_uv.vertices[::3]), p2=[], fallback_used=False,
            guarantee=2 * cfg.k + 1, k=cfg.k, k_prime=0, alpha=cfg.alpha, beta=cfg.beta,
        )
    if cfg is not None and len(diam_p) > trace.guarantee:
        diam_trace.k, diam_trace.k_prime = cfg.k, cfg.k_prime
        diam_trace.alpha, diam_trace.beta = cfg.alpha, cfg.beta
        trace = diam_trace
    trace.radius, trace.diameter = radius, diameter
    trace.target = diam_rad_bound(diameter, radius)
    if extend:
        trace.extension = _extend(dm, trace.p1 + trace.p2)
    result = Multipacking(tuple(trace.members))
    violation = verify_multipacking(dm, result)
    if violation is not None:
        raise AssertionError(f"constructed set is not a multipacking: {violation}")
    return result, trace
