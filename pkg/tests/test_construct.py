import dataclasses
import random

import pytest
from hypothesis import given, settings, strategies as st

from bmp import generators as gen
from bmp.certify import is_multipacking
from bmp.construct import (
    approx_multipacking,
    diam_rad_bound,
    find_configuration,
    make_configuration,
    theorem2_construct,
    third_vertex_packing,
)
from bmp.distance import PathWitness, all_pairs, radius_diameter, shortest_path
from bmp.errors import DisconnectedError, PreconditionError
from bmp.exact import mp_exact
from bmp.graph import Graph
from conftest import connected_graphs
from oracles import random_connected


def spider_config(k, kp):
    g = gen.spider(k, kp)
    return g, make_configuration(g, x=3 * k, y=g.n - 1, u=0, v=6 * k, k=k, k_prime=kp)


class TestThirdVertex:
    def test_p7(self):
        g = gen.path(7)
        p = third_vertex_packing(all_pairs(g), shortest_path(g, 0, 6))
        assert p.members == (0, 3, 6)
        assert len(p) == -(-(6 + 1) // 3)

    def test_single_vertex(self):
        assert len(third_vertex_packing(all_pairs(gen.path(1)), PathWitness((0,)))) == 1

    def test_c12_half_path(self):
        dm = all_pairs(gen.cycle(12))
        p = third_vertex_packing(dm, PathWitness(range(7)))
        assert len(p) == 3 and is_multipacking(dm, p)

    def test_non_isometric(self):
        with pytest.raises(PreconditionError):
            third_vertex_packing(all_pairs(gen.cycle(8)), PathWitness(range(6)))

    @given(connected_graphs(max_n=16))
    def test_diametral_size(self, g):
        dm = all_pairs(g)
        _, d, _, (a, b) = radius_diameter(dm)
        p = third_vertex_packing(dm, shortest_path(g, a, b))
        assert len(p) == -(-(d + 1) // 3)
        assert is_multipacking(dm, p)


class TestTheorem2:
    def test_spider_1_1(self):
        g, cfg = spider_config(1, 1)
        trace = theorem2_construct(all_pairs(g), cfg)
        assert trace.p1 == [0, 3, 6]
        assert trace.p2 == []
        assert trace.guarantee == 3

    def test_spider_2_2(self):
        g, cfg = spider_config(2, 2)
        dm = all_pairs(g)
        trace = theorem2_construct(dm, cfg)
        assert len(trace.members) == 6
        assert trace.p2 == [cfg.path_xy[12]]
        assert dm.dist[cfg.x][trace.p2[0]] == 12

    def test_shortened_branch_rejected(self):
        g, cfg = spider_config(2, 2)
        short = dataclasses.replace(cfg, path_xy=PathWitness(cfg.path_xy.vertices[:-1]),
                                    y=cfg.path_xy[-2])
        with pytest.raises(PreconditionError, match="d\\(x,y\\)"):
            theorem2_construct(all_pairs(g), short)

    def test_wrong_k_prime_rejected(self):
        g, cfg = spider_config(2, 1)
        with pytest.raises(PreconditionError):
            theorem2_construct(all_pairs(g), dataclasses.replace(cfg, k_prime=3))

    def test_make_configuration_checks_distances(self):
        g = gen.spider(2, 2)
        with pytest.raises(PreconditionError, match="d\\(x,u\\)"):
            make_configuration(g, x=6, y=g.n - 1, u=1, v=12, k=2, k_prime=2)
        with pytest.raises(PreconditionError, match="d\\(x,y\\)"):
            make_configuration(g, x=6, y=g.n - 2, u=0, v=12, k=2, k_prime=2)

    @pytest.mark.parametrize("k, kp", [(k, kp) for k in (1, 2, 3) for kp in range(1, k + 1)])
    def test_all_small_spiders(self, k, kp):
        g, cfg = spider_config(k, kp)
        dm = all_pairs(g)
        trace = theorem2_construct(dm, cfg)
        assert not set(trace.p1) & set(trace.p2)
        assert len(trace.members) == 2 * k + kp
        assert is_multipacking(dm, trace.members)

    def test_random_configurations(self):
        # graft long paths onto random graphs and locate valid configurations
        rng = random.Random(8)
        built = 0
        for _ in range(120):
            k = rng.randint(1, 3)
            kp = rng.randint(1, k)
            base = gen.spider(k, kp)
            extra = rng.randrange(0, 6)
            n = base.n + extra
            edges = list(base.edges())
            for v in range(base.n, n):
                edges.append((rng.randrange(v), v))
            for _ in range(rng.randrange(4)):
                a, b = rng.sample(range(n), 2)
                if (min(a, b), max(a, b)) not in edges:
                    edges.append((min(a, b), max(a, b)))
            g = Graph.from_edges(n, edges)
            try:
                cfg = make_configuration(g, 3 * k, base.n - 1, 0, 6 * k, k, kp)
            except PreconditionError:
                continue
            dm = all_pairs(g)
            trace = theorem2_construct(dm, cfg)
            assert len(trace.members) == 2 * k + kp
            assert is_multipacking(dm, trace.members)
            built += 1
        assert built >= 20


class TestFindConfiguration:
    def test_p13(self):
        cfg = find_configuration(gen.path(13))
        assert (cfg.k, cfg.alpha, cfg.raw_k_prime, cfg.k_prime, cfg.beta) == (2, 0, 0, 0, 0)
        assert (cfg.u, cfg.x, cfg.v) == (0, 6, 12)

    def test_c5_falls_back(self):
        assert find_configuration(gen.cycle(5)) is None

    def test_spider_2_2(self):
        g = gen.spider(2, 2)
        dm = all_pairs(g)
        r, d, _, _ = radius_diameter(dm)
        cfg = find_configuration(g, dm)
        assert cfg.k == d // 6 and cfg.alpha == d % 6
        assert 3 * cfg.k + 3 * cfg.k_prime + cfg.beta == r
        D = dm.dist
        assert D[cfg.x][cfg.u] == D[cfg.x][cfg.v] == 3 * cfg.k
        assert D[cfg.u][cfg.v] == 6 * cfg.k
        assert D[cfg.x][cfg.y] == 3 * cfg.k + 3 * cfg.k_prime

    def test_disconnected(self):
        with pytest.raises(DisconnectedError):
            find_configuration(Graph.empty(2))

    @given(connected_graphs(max_n=30, max_extra=0.08))
    @settings(max_examples=150, deadline=None)
    def test_invariants(self, g):
        dm = all_pairs(g)
        r, d, _, _ = radius_diameter(dm)
        cfg = find_configuration(g, dm)
        if d < 6:
            assert cfg is None
            return
        D = dm.dist
        assert 0 <= cfg.k_prime <= cfg.k and 0 <= cfg.alpha <= 5
        assert 6 * cfg.k + cfg.alpha == d
        assert 3 * cfg.k + 3 * cfg.k_prime + cfg.beta == r
        assert D[cfg.x][cfg.u] == D[cfg.x][cfg.v] == 3 * cfg.k
        assert D[cfg.u][cfg.v] == 6 * cfg.k
        assert D[cfg.x][cfg.y] == 3 * cfg.k + 3 * cfg.k_prime
        assert cfg.path_uv.is_isometric(dm) and cfg.path_xy.is_isometric(dm)


class TestApprox:
    def test_c5(self):
        p, trace = approx_multipacking(gen.cycle(5))
        assert len(p) == 1 and trace.mode == "diametral" and trace.fallback_used

    def test_p13(self):
        p, trace = approx_multipacking(gen.path(13))
        assert len(p) == 5 == mp_exact(gen.path(13)).value
        assert trace.mode == "spine"

    def test_spider_2_2(self):
        g = gen.spider(2, 2)
        dm = all_pairs(g)
        r, d, _, _ = radius_diameter(dm)
        p, _ = approx_multipacking(g, dm)
        assert len(p) >= -(-(2 * d + 4 * r - 18) // 12)
        assert is_multipacking(dm, p)

    def test_k1(self):
        p, trace = approx_multipacking(gen.path(1))
        assert p.members == (0,) and trace.target == 1

    def test_errors(self):
        with pytest.raises(DisconnectedError):
            approx_multipacking(Graph.empty(2))
        with pytest.raises(DisconnectedError):
            approx_multipacking(Graph.empty(0))

    def test_two_path_mode_used(self):
        # C24: d = r = 12, so k = 2 and k' = (12 - 6) // 3 = 2
        p, trace = approx_multipacking(gen.cycle(24))
        assert trace.mode == "two-path"
        assert (trace.k, trace.k_prime) == (2, 2)
        assert len(p) == 8

    def test_clamped_k_prime_needs_extension(self):
        # C32: d = r = 16, raw k' = 3 > k = 2.  Both paths give 6 < 7.
        g = gen.cycle(32)
        bare, trace = approx_multipacking(g, extend=False)
        assert trace.target == 7 and len(bare) == 6
        full, trace = approx_multipacking(g)
        assert len(full) >= 7

    def test_trace_json(self):
        _, trace = approx_multipacking(gen.spider(2, 2))
        out = trace.to_json()
        assert {"P1", "P2", "k", "k_prime", "alpha", "beta", "fallback", "guarantee"} <= set(out)

    @pytest.mark.parametrize("n", range(3, 61))
    def test_cycles_meet_target(self, n):
        g = gen.cycle(n)
        p, trace = approx_multipacking(g)
        assert len(p) >= trace.target == diam_rad_bound(n // 2, n // 2)

    def test_random_connected_meet_target(self):
        rng = random.Random(2024)
        for _ in range(150):
            g = random_connected(rng.randrange(1, 41), rng.random() * 0.1, rng)
            dm = all_pairs(g)
            p, trace = approx_multipacking(g, dm)
            r, d, _, _ = radius_diameter(dm)
            assert is_multipacking(dm, p)
            assert len(p) >= diam_rad_bound(d, r)
            assert 2 * len(p) >= r - 3


def test_diam_rad_bound():
    assert diam_rad_bound(0, 0) == 1
    assert diam_rad_bound(12, 6) == 3  # ceil(2 + 2 - 1.5)
    assert diam_rad_bound(16, 16) == 7
    assert diam_rad_bound(6, 3) == 1
