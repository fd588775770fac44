"""Bound reports and conjecture sweeps over streams of graphs.

Every inequality is evaluated on intervals so that reports stay honest when
only bounds are known: a check passes when it holds for every value in the
intervals, fails when it holds for none, and is ``unknown`` otherwise.
"""

from __future__ import annotations

import itertools
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator

from .certify import Broadcast, Multipacking, verify_broadcast, verify_multipacking
from .construct import approx_multipacking
from .distance import all_pairs, radius_diameter
from .errors import BmpError, DisconnectedError, SizeError
from .exact import default_cap, gb_exact, mp_exact
from .generators import gnp
from .graph import Graph, encode_graph6, is_connected, parse_graph6

__all__ = [
    "Check",
    "BoundsReport",
    "compute_bounds",
    "evaluate_checks",
    "SweepRecord",
    "SweepSummary",
    "evaluate_graph",
    "sweep",
    "summarize",
    "enumerate_connected",
    "graph6_stream",
    "gnp_stream",
    "ENUMERATION_CAP",
]

Interval = tuple[int, int]


@dataclass(frozen=True)
class Check:
    name: str
    lhs: Interval
    rhs: Interval
    status: str  # pass | fail | unknown | n/a
    tight: bool = False

    def to_json(self) -> dict:
        def show(iv):
            return iv[0] if iv[0] == iv[1] else list(iv)

        return {"name": self.name, "lhs": show(self.lhs), "rhs": show(self.rhs),
                "status": self.status, "tight": self.tight}


def _le(name: str, lhs: Interval, rhs: Interval) -> Check:
    if lhs[1] <= rhs[0]:
        status = "pass"
    elif lhs[0] > rhs[1]:
        status = "fail"
    else:
        status = "unknown"
    tight = lhs[0] == lhs[1] == rhs[0] == rhs[1]
    return Check(name, lhs, rhs, status, tight)


def _when(cond: tuple[bool, bool], check: Check) -> Check:
    """Apply ``check`` under a condition known as (surely true, possibly true)."""
    surely, possibly = cond
    if not possibly:
        return Check(check.name, check.lhs, check.rhs, "n/a")
    if surely or check.status == "pass":
        return check
    return Check(check.name, check.lhs, check.rhs, "unknown")


def _affine(iv: Interval, a: int, b: int) -> Interval:
    lo, hi = a * iv[0] + b, a * iv[1] + b
    return (min(lo, hi), max(lo, hi))


def evaluate_checks(mp: Interval, gb: Interval, radius: int | None = None,
                    diameter: int | None = None) -> list[Check]:
    """All the inequalities relating ``mp``, ``gb``, radius and diameter.

    Radius/diameter checks are left out when those are ``None`` (disconnected
    graphs); the rest hold for every graph.
    """
    checks = [
        _le("duality: mp <= gb", mp, gb),
        _le("theorem: gb <= 2mp+3", gb, _affine(mp, 2, 3)),
        _le("conjecture: gb <= 2mp", gb, _affine(mp, 2, 0)),
        _when((mp[0] >= 2, mp[1] >= 2), _le("hartnell-mynhardt: mp>=2 => gb <= 3mp-2", gb, _affine(mp, 3, -2))),
        _when((mp == (3, 3), mp[0] <= 3 <= mp[1]), _le("mp=3 => gb <= 6", gb, (6, 6))),
        _when((mp[0] >= 4, mp[1] >= 4), _le("mp>=4 => gb <= 3mp-4", gb, _affine(mp, 3, -4))),
        _when((mp[1] <= 4, mp[0] <= 4), _le("mp<=4 => gb <= 2mp", gb, _affine(mp, 2, 0))),
    ]
    if radius is not None and diameter is not None:
        diam_rad = -(-(diameter + 2 * radius - 9) // 6)
        diametral = -(-(diameter + 1) // 3)
        checks += [
            _le("radius: gb <= rad", gb, (radius, radius)),
            _le("diam-rad: ceil(d/6+r/3-3/2) <= mp", (diam_rad, diam_rad), mp),
            _le("diametral: ceil((d+1)/3) <= mp", (diametral, diametral), mp),
        ]
    return checks


@dataclass
class BoundsReport:
    n: int
    radius: int
    diameter: int
    mp: Interval
    gb: Interval
    mp_witness: Multipacking
    gb_witness: Broadcast
    approx_size: int
    checks: list[Check] = field(default_factory=list)

    @property
    def mp_exact(self) -> bool:
        return self.mp[0] == self.mp[1]

    @property
    def gb_exact(self) -> bool:
        return self.gb[0] == self.gb[1]

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == "fail"]

    def check(self, name_prefix: str) -> Check:
        return next(c for c in self.checks if c.name.startswith(name_prefix))

    def to_json(self) -> dict:
        def show(iv):
            return iv[0] if iv[0] == iv[1] else list(iv)

        return {
            "n": self.n,
            "radius": self.radius,
            "diameter": self.diameter,
            "mp": show(self.mp),
            "gb": show(self.gb),
            "approx_size": self.approx_size,
            "mp_witness": list(self.mp_witness.members),
            "gb_witness": {str(v): p for v, p in self.gb_witness.powers.items()},
            "checks": [c.to_json() for c in self.checks],
        }


def compute_bounds(g: Graph, cap: int | None = None) -> BoundsReport:
    """Radius, diameter, ``mp`` and ``gb`` (exact within the cap) plus every check.

    Above the cap, ``mp`` is bracketed by the approximation and the radius,
    and ``gb`` by the same lower bound and the radius.  All reported numbers
    come from freshly re-verified witnesses.
    """
    cap = default_cap() if cap is None else cap
    dm = all_pairs(g)
    if not dm.connected:
        raise DisconnectedError("bounds need a connected graph")
    radius, diameter, center, _ = radius_diameter(dm)
    approx, _ = approx_multipacking(g, dm)
    if g.n <= cap:
        mp_w = mp_exact(g, cap=cap, dm=dm).witness
        gb_w = gb_exact(g, cap=cap, dm=dm).witness
    else:
        mp_w = approx
        gb_w = Broadcast({center: max(1, radius)})
    if verify_multipacking(dm, mp_w) is not None or verify_broadcast(dm, gb_w) is not None:
        raise AssertionError("witness failed re-verification")
    if verify_multipacking(dm, approx) is not None:
        raise AssertionError("approximate multipacking failed re-verification")
    if g.n <= cap:
        mp = (len(mp_w), len(mp_w))
        gb = (gb_w.cost, gb_w.cost)
    else:
        mp = (len(mp_w), gb_w.cost)
        gb = (len(mp_w), gb_w.cost)
    checks = evaluate_checks(mp, gb, radius, diameter)
    checks.append(_le("approx: rad-3 <= 2|approx|", (radius - 3,) * 2, (2 * len(approx),) * 2))
    return BoundsReport(g.n, radius, diameter, mp, gb, mp_w, gb_w, len(approx), checks)


# -- sweeps ----------------------------------------------------------------------

ENUMERATION_CAP = 6


@dataclass(frozen=True)
class SweepRecord:
    graph_id: str
    graph6: str
    n: int
    mp: int
    gb: int
    conjecture: str  # ok | tight | violation
    failures: tuple[str, ...]
    millis: float
    mp_witness: tuple[int, ...] = ()
    gb_witness: tuple[tuple[int, int], ...] = ()

    @property
    def ratio(self) -> float:
        return self.gb / self.mp if self.mp else float("inf")

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "id": self.graph_id,
            "graph6": self.graph6,
            "n": self.n,
            "mp": self.mp,
            "gb": self.gb,
            "ratio": round(self.ratio, 6),
            "conjecture": self.conjecture,
            "failures": list(self.failures),
        }
        if timing:
            out["millis"] = self.millis
        return out


@dataclass(frozen=True)
class SweepSkip:
    graph_id: str
    reason: str

    def to_json(self, timing: bool = False) -> dict:
        return {"id": self.graph_id, "skipped": self.reason}


def evaluate_graph(graph_id: str, g: Graph, cap: int | None = None) -> SweepRecord:
    """Exact ``mp`` and ``gb`` for one graph plus the status of every theorem."""
    t0 = time.perf_counter()
    dm = all_pairs(g)
    a = mp_exact(g, cap=cap, dm=dm)
    b = gb_exact(g, cap=cap, dm=dm)
    mp, gb = a.value, b.value
    if gb > 2 * mp:
        status = "violation"
    elif gb == 2 * mp:
        status = "tight"
    else:
        status = "ok"
    radius = diameter = None
    if dm.connected:
        radius, diameter, _, _ = radius_diameter(dm)
    failures = [c.name for c in evaluate_checks((mp, mp), (gb, gb), radius, diameter)
                if c.status == "fail" and not c.name.startswith("conjecture")]
    return SweepRecord(
        graph_id, encode_graph6(g).decode("ascii"), g.n, mp, gb, status, tuple(failures),
        round((time.perf_counter() - t0) * 1000, 3),
        a.witness.members, tuple(b.witness.powers.items()),
    )


def _evaluate_item(item):
    graph_id, g, cap = item
    if isinstance(g, Exception):
        return SweepSkip(graph_id, str(g))
    try:
        return evaluate_graph(graph_id, g, cap)
    except SizeError as exc:
        return SweepSkip(graph_id, str(exc))


def sweep(
    graphs: Iterable[tuple[str, Graph | Exception]],
    cap: int | None = None,
    jobs: int = 1,
) -> Iterator[SweepRecord | SweepSkip]:
    """Evaluate each ``(id, graph)`` pair, yielding results in input order.

    Items whose graph is an exception (a parse failure) become skips.  With
    ``jobs > 1`` graphs are solved in worker processes.
    """
    cap = default_cap() if cap is None else cap
    items = ((gid, g, cap) for gid, g in graphs)
    if jobs <= 1:
        yield from map(_evaluate_item, items)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_evaluate_item, items, chunksize=64)


@dataclass
class SweepSummary:
    count: int = 0
    skipped: list[SweepSkip] = field(default_factory=list)
    max_ratio: Fraction | None = None
    histogram: Counter = field(default_factory=Counter)
    extremal: list[str] = field(default_factory=list)
    violations: list[SweepRecord] = field(default_factory=list)
    failures: list[SweepRecord] = field(default_factory=list)

    def add(self, rec: SweepRecord | SweepSkip) -> None:
        if isinstance(rec, SweepSkip):
            self.skipped.append(rec)
            return
        self.count += 1
        ratio = Fraction(rec.gb, rec.mp)
        if self.max_ratio is None or ratio > self.max_ratio:
            self.max_ratio = ratio
        self.histogram[f"{rec.gb}/{rec.mp}"] += 1
        if rec.conjecture == "tight":
            self.extremal.append(rec.graph6)
        elif rec.conjecture == "violation":
            self.violations.append(rec)
        if rec.failures:
            self.failures.append(rec)

    def to_json(self) -> dict:
        return {
            "graphs": self.count,
            "skipped": [s.to_json() for s in self.skipped],
            "max_ratio": None if self.max_ratio is None else float(self.max_ratio),
            "histogram": dict(sorted(self.histogram.items())),
            "extremal_graph6": self.extremal,
            "conjecture_violations": [r.graph6 for r in self.violations],
            "theorem_failures": [r.graph6 for r in self.failures],
        }


def summarize(records: Iterable[SweepRecord | SweepSkip]) -> SweepSummary:
    summary = SweepSummary()
    for rec in records:
        summary.add(rec)
    return summary


# -- graph sources -----------------------------------------------------------------


def enumerate_connected(n: int) -> Iterator[tuple[str, Graph]]:
    """Every connected labeled graph on ``n <= 6`` vertices.

    Edge subsets are visited in increasing bitmask order over the pairs
    ``(0,1), (0,2), ..., (n-2,n-1)``; the id is the bitmask.
    """
    if not 1 <= n <= ENUMERATION_CAP:
        raise SizeError(f"labeled enumeration supports 1 <= n <= {ENUMERATION_CAP}, got {n}")
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if is_connected(g):
            yield str(mask), g


def graph6_stream(lines: Iterable[str | bytes]) -> Iterator[tuple[str, Graph | Exception]]:
    """Parse newline-delimited graph6; bad lines come through as exceptions."""
    for lineno, line in enumerate(lines, start=1):
        if isinstance(line, bytes):
            line = line.decode("ascii", errors="replace")
        line = line.strip()
        if not line:
            continue
        try:
            yield f"line {lineno}", parse_graph6(line)
        except BmpError as exc:
            yield f"line {lineno}", exc


def gnp_stream(n: int, p: float, count: int, seed: int = 0, connected_only: bool = True
               ) -> Iterator[tuple[str, Graph]]:
    """``count`` graphs from seeds ``seed, seed+1, ...`` (disconnected ones skipped if asked)."""
    produced = 0
    s = seed
    while produced < count:
        g = gnp(n, p, s)
        if not connected_only or is_connected(g):
            yield f"seed {s}", g
            produced += 1
        s += 1
        if s - seed > 1000 * count + 1000:
            raise BmpError(f"gnp({n}, {p}) rarely connected; gave up after {s - seed} seeds")
