"""Exact multipacking number and broadcast number for small graphs.

Both solvers are exponential branch-and-bound searches meant as reference
oracles at desk scale (a few dozen vertices).  Each works per connected
component and sums the results, since balls never cross components.
"""

from __future__ import annotations

import os
import time
from bisect import bisect_left, bisect_right, insort
from dataclasses import dataclass

from .certify import Broadcast, Multipacking, verify_broadcast, verify_multipacking
from .construct import third_vertex_packing
from .distance import DistanceMatrix, all_pairs, shortest_path
from .errors import SizeError
from .graph import Graph, connected_components

__all__ = ["ExactResult", "DEFAULT_CAP", "default_cap", "mp_exact", "gb_exact"]

DEFAULT_CAP = 24


def default_cap() -> int:
    """Vertex cap for the exact solvers; ``BMP_CAP`` overrides it."""
    env = os.environ.get("BMP_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise SizeError(f"BMP_CAP must be an integer, got {env!r}") from None
    return DEFAULT_CAP


@dataclass(frozen=True)
class ExactResult:
    parameter: str
    value: int
    witness: Multipacking | Broadcast
    nodes_explored: int
    elapsed: float

    def to_json(self) -> dict:
        if isinstance(self.witness, Multipacking):
            witness = list(self.witness.members)
        else:
            witness = {str(v): p for v, p in self.witness.powers.items()}
        return {
            "parameter": self.parameter,
            "value": self.value,
            "witness": witness,
            "nodes": self.nodes_explored,
            "millis": round(self.elapsed * 1000, 3),
        }


def _check_cap(g: Graph, cap: int | None) -> None:
    cap = default_cap() if cap is None else cap
    if g.n > cap:
        raise SizeError(f"n = {g.n} exceeds exact-solver cap {cap} (raise with cap= or BMP_CAP)")


# -- multipacking --------------------------------------------------------------


def _mp_component(g: Graph, dm: DistanceMatrix, comp: list[int]) -> tuple[list[int], int]:
    D = dm.dist
    if len(comp) == 1:
        return [comp[0]], 1
    ecc = {v: max(D[v]) for v in comp}
    upper = min(ecc.values())  # mp <= gamma_b <= radius
    order = sorted(comp, key=lambda v: (-ecc[v], v))

    # incumbent: every third vertex of a diametral path
    a = min(comp, key=lambda v: (-ecc[v], v))
    b = D[a].index(ecc[a])
    best = list(third_vertex_packing(dm, shortest_path(g, a, b, D[a])).members)
    if len(best) >= upper:
        return best, 1

    lists = {w: [] for w in comp}
    near = {v: [w for w in comp if D[v][w] <= 2] for v in comp}
    blocked = {v: 0 for v in comp}
    members: list[int] = []
    nodes = 0
    done = False

    def feasible(c: int) -> bool:
        for w in comp:
            d = D[w][c]
            lst = lists[w]
            pos = bisect_right(lst, d)
            if pos and d <= pos:
                return False
            for j in range(pos, len(lst)):
                if lst[j] < j + 2:
                    return False
        return True

    def push(c: int) -> None:
        for w in comp:
            insort(lists[w], D[w][c])
        for w in near[c]:
            blocked[w] += 1
        members.append(c)

    def pop() -> None:
        c = members.pop()
        for w in comp:
            lst = lists[w]
            del lst[bisect_left(lst, D[w][c])]
        for w in near[c]:
            blocked[w] -= 1

    def search(start: int) -> None:
        nonlocal best, nodes, done
        nodes += 1
        if len(members) > len(best):
            best = list(members)
            if len(best) >= upper:
                done = True
                return
        # members are pairwise >= 3 apart, so blocked vertices cannot join
        free = [i for i in range(start, len(order)) if not blocked[order[i]]]
        size = len(members)
        for j, i in enumerate(free):
            if size + len(free) - j <= len(best):
                return
            c = order[i]
            if feasible(c):
                push(c)
                search(i + 1)
                pop()
                if done:
                    return

    search(0)
    return sorted(best), nodes


def mp_exact(g: Graph, cap: int | None = None, dm: DistanceMatrix | None = None) -> ExactResult:
    """Maximum multipacking by branch and bound.

    Vertices are tried in order of decreasing eccentricity (ties by index).
    Feasibility is maintained incrementally through per-vertex sorted lists
    of member distances (the ``d_i >= i`` test).  A branch is cut when the
    unblocked candidates left cannot beat the incumbent, and the search stops
    as soon as the radius (an upper bound) is reached.
    """
    _check_cap(g, cap)
    t0 = time.perf_counter()
    dm = dm if dm is not None else all_pairs(g)
    members: list[int] = []
    nodes = 0
    for comp in connected_components(g):
        part, k = _mp_component(g, dm, comp)
        members.extend(part)
        nodes += k
    witness = Multipacking(tuple(members))
    assert verify_multipacking(dm, witness) is None
    return ExactResult("mp", len(witness), witness, nodes, time.perf_counter() - t0)


# -- broadcast -----------------------------------------------------------------


def _gb_component(dm: DistanceMatrix, comp: list[int]) -> tuple[dict[int, int], int]:
    D = dm.dist
    if len(comp) == 1:
        return {comp[0]: 1}, 1
    ecc = {v: max(D[v]) for v in comp}

    # candidate balls (v, r), 1 <= r <= ecc(v), as vertex bitmasks
    cands = []
    for v in comp:
        row = D[v]
        for r in range(1, ecc[v] + 1):
            mask = 0
            for u in comp:
                if row[u] <= r:
                    mask |= 1 << u
            cands.append((r, v, mask))
    cands.sort()
    # drop (v, r) when another ball of no greater cost covers a superset
    kept = []
    for i, (r, v, mask) in enumerate(cands):
        dominated = False
        for j, (s, u, other) in enumerate(cands):
            if j == i or s > r or mask & ~other:
                continue
            if s < r or other != mask or j < i:
                dominated = True
                break
        if not dominated:
            kept.append((r, v, mask))

    full = 0
    for u in comp:
        full |= 1 << u
    center = min(comp, key=lambda w: (ecc[w], w))
    best_cost = ecc[center]
    best = {center: ecc[center]}

    covering = {u: [] for u in comp}
    for idx, (r, v, mask) in enumerate(kept):
        for u in comp:
            if mask >> u & 1:
                covering[u].append(idx)
    # try large balls first so good incumbents show up early
    for u in comp:
        covering[u].sort(key=lambda i: (-bin(kept[i][2]).count("1") / kept[i][0], i))

    nodes = 0
    chosen: list[int] = []

    def lower_bound(uncovered: int) -> int:
        # any multipacking inside the uncovered set needs that much more cost
        lists = {w: [] for w in comp}
        count = 0
        for c in comp:
            if not uncovered >> c & 1:
                continue
            ok = True
            for w in comp:
                d = D[w][c]
                lst = lists[w]
                pos = bisect_right(lst, d)
                if pos and d <= pos:
                    ok = False
                    break
                for j in range(pos, len(lst)):
                    if lst[j] < j + 2:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                for w in comp:
                    insort(lists[w], D[w][c])
                count += 1
        return count

    def search(uncovered: int, cost: int, forbidden: int) -> None:
        nonlocal best_cost, best, nodes
        nodes += 1
        if not uncovered:
            if cost < best_cost:
                best_cost = cost
                best = {}
                for i in chosen:
                    r, v, _ = kept[i]
                    best[v] = max(best.get(v, 0), r)
            return
        if cost + 1 >= best_cost:
            return
        if cost + lower_bound(uncovered) >= best_cost:
            return
        # branch on the uncovered vertex with fewest usable candidates
        pick = None
        pick_opts = None
        budget = best_cost - cost
        for u in comp:
            if uncovered >> u & 1:
                opts = [i for i in covering[u] if not forbidden >> i & 1 and kept[i][0] < budget]
                if pick_opts is None or len(opts) < len(pick_opts):
                    pick, pick_opts = u, opts
                    if len(opts) <= 1:
                        break
        for i in pick_opts:
            r, _, mask = kept[i]
            if cost + r >= best_cost:
                forbidden |= 1 << i
                continue
            chosen.append(i)
            search(uncovered & ~mask, cost + r, forbidden)
            chosen.pop()
            # later branches may not reuse this ball: those covers were seen here
            forbidden |= 1 << i

    search(full, 0, 0)
    return best, nodes


def gb_exact(g: Graph, cap: int | None = None, dm: DistanceMatrix | None = None) -> ExactResult:
    """Minimum-cost dominating broadcast as exact weighted set cover.

    Candidates are balls ``(v, r)`` with ``1 <= r <= ecc(v)`` costing ``r``;
    dominated balls are discarded.  The search branches on the uncovered
    vertex with fewest covering candidates, starts from the single center
    ball (cost = radius) and prunes with a greedy multipacking of the
    still-uncovered vertices as a lower bound.
    """
    _check_cap(g, cap)
    t0 = time.perf_counter()
    dm = dm if dm is not None else all_pairs(g)
    powers: dict[int, int] = {}
    nodes = 0
    for comp in connected_components(g):
        part, k = _gb_component(dm, comp)
        powers.update(part)
        nodes += k
    witness = Broadcast(powers)
    assert verify_broadcast(dm, witness) is None
    return ExactResult("gb", witness.cost, witness, nodes, time.perf_counter() - t0)
