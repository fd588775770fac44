"""Certificates for multipackings and dominating broadcasts.

A multipacking ``P`` satisfies ``|N_r(v) & P| <= r`` for every vertex ``v``
and radius ``r >= 1``.  Radii ``r >= |P|`` are vacuous, so only
``1 <= r <= |P| - 1`` need checking.  Equivalently, listing the finite
distances from ``v`` to the members in ascending order ``d_1 <= d_2 <= ...``,
every ``i >= 2`` must have ``d_i >= i``.  Both forms are implemented and
report the same canonical violation: smallest center, then smallest radius.
"""

from __future__ import annotations

import json
import math
from bisect import bisect_left, bisect_right, insort
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, NamedTuple

from .distance import DistanceMatrix, PathWitness, UNREACHABLE
from .errors import CertificateError, SizeError

__all__ = [
    "Multipacking",
    "Broadcast",
    "Violation",
    "verify_multipacking",
    "verify_multipacking_direct",
    "is_multipacking",
    "verify_broadcast",
    "is_dominating_broadcast",
    "lemma1_bound_check",
    "Lemma1Report",
    "pairwise_sufficient_condition",
    "PAIRWISE_CAP",
    "load_certificate",
    "PackingBuilder",
]


@dataclass(frozen=True)
class Multipacking:
    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def to_json(self) -> dict:
        return {"multipacking": list(self.members)}


@dataclass(frozen=True)
class Broadcast:
    """Broadcast powers keyed by vertex; vertices not listed have power 0."""

    powers: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        powers = {}
        for v, p in dict(self.powers).items():
            if not isinstance(p, int) or isinstance(p, bool) or p <= 0:
                raise CertificateError(f"power of vertex {v} must be a positive integer, got {p!r}")
            powers[int(v)] = p
        object.__setattr__(self, "powers", dict(sorted(powers.items())))

    @property
    def cost(self) -> int:
        return sum(self.powers.values())

    def to_json(self) -> dict:
        return {"broadcast": {str(v): p for v, p in self.powers.items()}}


@dataclass(frozen=True)
class Violation:
    """A re-checkable counterexample to a certificate.

    ``ball-overfull``: ``witness`` lists more than ``radius`` members inside
    the ball around ``center``.  ``uncovered``: ``witness`` lists every
    vertex not reached by any broadcast ball (center/radius unused).
    """

    kind: str
    center: int | None
    radius: int | None
    witness: tuple[int, ...]

    def recheck(self, dm: DistanceMatrix, certificate: "Multipacking | Broadcast") -> bool:
        """True iff this violation is genuine for ``certificate`` on ``dm``."""
        if self.kind == "ball-overfull":
            members = set(certificate.members)
            row = dm.dist[self.center]
            return (
                len(self.witness) > self.radius
                and all(w in members and 0 <= row[w] <= self.radius for w in self.witness)
            )
        if self.kind == "uncovered":
            powers = certificate.powers
            return bool(self.witness) and all(
                not any(0 <= dm.dist[u][v] <= p for v, p in powers.items()) for u in self.witness
            )
        return False

    def to_json(self) -> dict:
        return {"kind": self.kind, "center": self.center, "radius": self.radius, "witness": list(self.witness)}


def _members(dm: DistanceMatrix, p) -> tuple[int, ...]:
    members = p.members if isinstance(p, Multipacking) else tuple(sorted(set(p)))
    for m in members:
        if not 0 <= m < dm.n:
            raise IndexError(f"member {m} out of range for n={dm.n}")
    return members


def verify_multipacking(dm: DistanceMatrix, p: Multipacking | Iterable[int]) -> Violation | None:
    """Return ``None`` if ``p`` is a multipacking, else the first violation.

    Uses the sorted-distance form: ``O(n |P| log |P|)``.
    """
    members = _members(dm, p)
    for v in range(dm.n):
        row = dm.dist[v]
        ds = sorted(row[m] for m in members if row[m] != UNREACHABLE)
        for i in range(2, len(ds) + 1):
            if ds[i - 1] < i:
                r = i - 1
                inside = tuple(m for m in members if 0 <= row[m] <= r)
                return Violation("ball-overfull", v, r, inside)
    return None


def verify_multipacking_direct(dm: DistanceMatrix, p: Multipacking | Iterable[int]) -> Violation | None:
    """Literal ball-by-ball check over every center and ``r in [1, |P|-1]``."""
    members = _members(dm, p)
    for v in range(dm.n):
        row = dm.dist[v]
        for r in range(1, len(members)):
            inside = tuple(m for m in members if 0 <= row[m] <= r)
            if len(inside) > r:
                return Violation("ball-overfull", v, r, inside)
    return None


def is_multipacking(dm: DistanceMatrix, p: Multipacking | Iterable[int]) -> bool:
    return verify_multipacking(dm, p) is None


def verify_broadcast(dm: DistanceMatrix, f: Broadcast | Mapping[int, int]) -> Violation | None:
    """Return ``None`` if every vertex lies in some ball ``N_f(v)(v)``."""
    if not isinstance(f, Broadcast):
        f = Broadcast(f)
    for v in f.powers:
        if not 0 <= v < dm.n:
            raise IndexError(f"broadcasting vertex {v} out of range for n={dm.n}")
    covered = [False] * dm.n
    for v, power in f.powers.items():
        for u, d in enumerate(dm.dist[v]):
            if 0 <= d <= power:
                covered[u] = True
    uncovered = tuple(u for u in range(dm.n) if not covered[u])
    if uncovered:
        return Violation("uncovered", None, None, uncovered)
    return None


def is_dominating_broadcast(dm: DistanceMatrix, f: Broadcast | Mapping[int, int]) -> bool:
    return verify_broadcast(dm, f) is None


class PackingBuilder:
    """Grow a multipacking one vertex at a time, with undo.

    Keeps, for every center, the sorted distances to current members, so
    :meth:`can_add` costs ``O(n |P|)`` instead of a full re-verification.
    """

    def __init__(self, dm: DistanceMatrix, centers: Iterable[int] | None = None):
        self.dm = dm
        self.centers = list(range(dm.n)) if centers is None else list(centers)
        self.lists: dict[int, list[int]] = {c: [] for c in self.centers}
        self.members: list[int] = []

    def can_add(self, c: int) -> bool:
        dist = self.dm.dist
        for w in self.centers:
            d = dist[w][c]
            if d == UNREACHABLE:
                continue
            lst = self.lists[w]
            pos = bisect_right(lst, d)
            # new element lands at 1-based rank pos+1; later ones shift by one
            if pos >= 1 and d < pos + 1:
                return False
            for j in range(pos, len(lst)):
                if lst[j] < j + 2:
                    return False
        return True

    def add(self, c: int) -> None:
        dist = self.dm.dist
        for w in self.centers:
            d = dist[w][c]
            if d != UNREACHABLE:
                insort(self.lists[w], d)
        self.members.append(c)

    def pop(self) -> int:
        c = self.members.pop()
        dist = self.dm.dist
        for w in self.centers:
            d = dist[w][c]
            if d != UNREACHABLE:
                lst = self.lists[w]
                del lst[bisect_left(lst, d)]
        return c

    def try_add(self, c: int) -> bool:
        if c in self.members or not self.can_add(c):
            return False
        self.add(c)
        return True


class Lemma1Report(NamedTuple):
    holds: bool
    max_ratio: float
    worst_center: int | None
    worst_radius: int | None
    members: tuple[int, ...]


def lemma1_bound_check(dm: DistanceMatrix, path: PathWitness, stride_start: int = 0) -> Lemma1Report:
    """Scan every ball against the every-third-vertex bound.

    ``P`` is ``path[stride_start::3]``.  For each center ``v`` and radius
    ``1 <= r <= max distance`` the count ``|N_r(v) & P|`` is compared with
    ``ceil((2r + 1) / 3)``.  The report carries the largest count/bound ratio
    (first attained in (center, radius) order).
    """
    if stride_start not in (0, 1, 2):
        raise ValueError(f"stride_start must be 0, 1 or 2, got {stride_start}")
    path.require_isometric(dm)
    members = tuple(path.vertices[stride_start::3])
    top = max(1, dm.max_distance())
    best = (-1.0, None, None)
    holds = True
    for v in range(dm.n):
        row = dm.dist[v]
        ds = [row[m] for m in members if row[m] != UNREACHABLE]
        for r in range(1, top + 1):
            count = sum(1 for d in ds if d <= r)
            bound = -(-(2 * r + 1) // 3)
            if count > bound:
                holds = False
            ratio = count / bound
            if ratio > best[0]:
                best = (ratio, v, r)
    return Lemma1Report(holds, max(best[0], 0.0), best[1], best[2], members)


PAIRWISE_CAP = 12


def pairwise_sufficient_condition(dm: DistanceMatrix, p: Multipacking | Iterable[int]) -> bool:
    """Every ``U`` subset of ``P`` with ``|U| >= 2`` has a pair at distance ``>= 2|U| - 1``.

    Sufficient (not necessary) for ``P`` to be a multipacking.  Vertices in
    different components count as infinitely far apart.  Exponential in
    ``|P|``; capped at :data:`PAIRWISE_CAP` members.
    """
    members = _members(dm, p)
    if len(members) > PAIRWISE_CAP:
        raise SizeError(f"|P| = {len(members)} exceeds cap {PAIRWISE_CAP}")

    def far(a: int, b: int) -> float:
        d = dm.dist[a][b]
        return math.inf if d == UNREACHABLE else d

    for size in range(2, len(members) + 1):
        need = 2 * size - 1
        for subset in combinations(members, size):
            if not any(far(a, b) >= need for a, b in combinations(subset, 2)):
                return False
    return True


def load_certificate(text: str) -> Multipacking | Broadcast:
    """Parse ``{"multipacking": [...]}`` or ``{"broadcast": {"v": power}}``."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateError(f"malformed JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise CertificateError("certificate must be a JSON object")
    if "multipacking" in obj:
        members = obj["multipacking"]
        if not isinstance(members, list) or not all(isinstance(m, int) and not isinstance(m, bool) for m in members):
            raise CertificateError("multipacking must be a list of integers")
        return Multipacking(tuple(members))
    if "broadcast" in obj:
        powers = obj["broadcast"]
        if not isinstance(powers, dict):
            raise CertificateError("broadcast must be an object mapping vertex to power")
        try:
            parsed = {int(k): v for k, v in powers.items()}
        except ValueError:
            raise CertificateError("broadcast keys must be vertex indices") from None
        return Broadcast(parsed)
    raise CertificateError("expected a 'multipacking' or 'broadcast' key")
