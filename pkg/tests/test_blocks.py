"""Triangular-block partition, 2-connected census, and peeling."""

import itertools
import random

import pytest

import builders
from planturan.blocks import (
    GrowthMode,
    classify_block,
    grow_block,
    peel,
    triangular_blocks,
    two_connected_census,
)
from planturan.construct import gen_g0, gen_theorem2
from planturan.core import AbstractGraph, plane_graph_from_faces


class TestClassify:
    def test_named_classes(self):
        assert classify_block(2, 1, (1, 1)) == "K2"
        assert classify_block(3, 3, (2, 2, 2)) == "K3"
        assert classify_block(4, 5, (2, 2, 3, 3)) == "B4"
        assert classify_block(5, 7, (2, 2, 3, 3, 4)) == "B5a"
        assert classify_block(5, 8, (3, 3, 3, 3, 4)) == "B5b"

    def test_profile_disambiguates(self):
        # 5 vertices, 7 edges with the wrong profile is not the fan
        assert classify_block(5, 7, (2, 2, 2, 4, 4)) == "Other"
        assert classify_block(4, 6, (3, 3, 3, 3)) == "Other"  # K4


class TestPartition:
    def test_fixture_censuses(self):
        cases = [
            (builders.triangle(), {"K3": 1}),
            (builders.cube(), {"K2": 12}),
            (builders.diamond(), {"B4": 1}),
            (builders.fan5(), {"B5a": 1}),
            (builders.wheel4(), {"B5b": 1}),
        ]
        for g, expected in cases:
            assert triangular_blocks(g).census() == expected

    def test_k4_is_other(self):
        g = plane_graph_from_faces(4, [(0, 1, 2), (0, 2, 3), (0, 3, 1), (1, 3, 2)])
        assert triangular_blocks(g).census() == {"Other": 1}

    def test_blocks_partition_edges(self):
        rng = random.Random(5150)
        graphs = [builders.wheel4(), gen_theorem2(4).graph, gen_g0().graph]
        graphs += [builders.random_plane_graph(rng) for _ in range(30)]
        for g in graphs:
            for mode in GrowthMode:
                part = triangular_blocks(g, mode)
                seen = [e for b in part.blocks for e in b.edges]
                assert sorted(seen) == list(g.edges)

    def test_block_of_edge(self):
        g = builders.diamond()
        part = triangular_blocks(g)
        assert part.block_of_edge(1, 0).cls == "B4"
        with pytest.raises(KeyError):
            part.block_of_edge(0, 9)

    def test_growth_modes_differ_on_nonfacial_triangle(self):
        # triangle with one pendant inside and one outside: the triangle
        # bounds no face, so FACE growth sees no glue at all
        g = plane_graph_from_faces(5, [(0, 3, 0, 1, 2), (0, 2, 1, 4, 1)])
        assert sorted(f.length for f in g.faces) == [5, 5]
        assert triangular_blocks(g, GrowthMode.TRIANGLE).census() == {
            "K2": 2,
            "K3": 1,
        }
        assert triangular_blocks(g, GrowthMode.FACE).census() == {"K2": 5}

    def test_partition_matches_grow_block(self):
        rng = random.Random(77)
        graphs = [builders.random_plane_graph(rng) for _ in range(10)]
        graphs.append(gen_theorem2(3).graph)
        for g in graphs:
            part = triangular_blocks(g)
            for b in part.blocks:
                for e in b.edges:
                    assert grow_block(g, e) == frozenset(b.edges)

    def test_grow_block_seed_independent(self):
        g = gen_g0().graph
        part = triangular_blocks(g)
        blk = part.blocks[0]
        grown = {grow_block(g, e) for e in blk.edges}
        assert grown == {frozenset(blk.edges)}

    def test_census_mode_tag(self):
        g = builders.triangle()
        assert triangular_blocks(g, GrowthMode.FACE).mode is GrowthMode.FACE


class TestTwoConnected:
    def test_bowtie(self):
        g = AbstractGraph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
        cen = two_connected_census(g)
        assert cen.size_counts() == {3: 2}
        assert cen.max_size() == 3
        assert cen.count_of_size(3) == 2
        assert cen.count_of_size_at_least(4) == 0

    def test_bridges_are_two_vertex_blocks(self):
        g = AbstractGraph(4, [(0, 1), (1, 2), (2, 3)])
        cen = two_connected_census(g)
        assert cen.size_counts() == {2: 3}

    def test_edge_partition(self):
        g = builders.lemma1_positive().abstract()
        cen = two_connected_census(g)
        assert sum(e for _, _, e in cen.components) == g.edge_count


class TestPeel:
    def test_noop_on_min_degree_3(self):
        g = builders.wheel4().abstract()
        res = peel(g)
        assert res.trace == ()
        assert res.graph == g
        assert res.kept == (0, 1, 2, 3, 4)

    def test_path_peels_to_nothing(self):
        g = AbstractGraph(4, [(0, 1), (1, 2), (2, 3)])
        res = peel(g)
        assert res.kept == ()
        assert len(res.trace) == 4
        assert all(d <= 2 for _, d in res.trace)

    def test_pendant_then_core(self):
        edges = list(builders.wheel4().edges) + [(4, 5)]
        g = AbstractGraph(6, edges)
        res = peel(g)
        assert res.trace == ((5, 1),)
        assert res.kept == (0, 1, 2, 3, 4)
        assert res.graph == builders.wheel4().abstract()

    def test_result_has_min_degree_3(self):
        rng = random.Random(31)
        for _ in range(40):
            g = builders.random_plane_graph(rng).abstract()
            res = peel(g)
            if res.graph.vertex_count:
                assert res.graph.min_degree() >= 3

    def test_peeling_inequalities(self):
        # removing a vertex of degree d <= 2 drops (n, e) by (1, d), so
        # 15n - 7e and 7n - 3e both decrease by at least 1 per step
        rng = random.Random(32)
        for _ in range(40):
            g = builders.random_plane_graph(rng).abstract()
            res = peel(g)
            n, e = g.vertex_count, g.edge_count
            np_, ep = res.graph.vertex_count, res.graph.edge_count
            steps = n - np_
            assert 15 * n - 7 * e >= 15 * np_ - 7 * ep + steps
            assert 7 * n - 3 * e >= 7 * np_ - 3 * ep + steps
