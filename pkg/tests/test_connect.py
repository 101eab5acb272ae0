import random

import pytest

from conftest import small_weighted_instance
from structaug.connect import (
    AnchorContext,
    CoverTooLarge,
    decide_connect,
    enumerate_anchor_embeddings,
    enumerate_anchor_sets,
    extend_by_matching,
    solve_connect,
)
from structaug.graph import (
    Graph,
    WeightFn,
    complete_graph,
    empty_graph,
    is_connected,
    matching_graph,
    path_graph,
    star_graph,
    superpose,
)
from structaug.oracle import brute_force_optimum

EDGE = Graph(2, [(0, 1)])
PATH_PLUS_ISOLATED = Graph(4, [(0, 1), (1, 2)])


class TestSolve:
    def test_forced_pair(self):
        assert solve_connect(empty_graph(2), EDGE, WeightFn(5)).weight == 5

    def test_path_plus_isolated(self):
        sol = solve_connect(PATH_PLUS_ISOLATED, EDGE, WeightFn(1))
        assert sol.weight == 1
        assert is_connected(superpose(PATH_PLUS_ISOLATED, EDGE, sol.phi))

    def test_h_too_large(self):
        assert solve_connect(empty_graph(2), path_graph(3), WeightFn(0)) is None

    def test_isolated_h_vertices_are_lifted(self):
        h = Graph(4, [(1, 2)])
        sol = solve_connect(Graph(5, [(0, 1), (1, 2), (3, 4)]), h, WeightFn(1, {(2, 3): 0}))
        assert sol.weight == 0
        assert sorted(sol.phi.as_dict()) == [0, 1, 2, 3]

    def test_edgeless_h(self):
        assert solve_connect(path_graph(3), empty_graph(2), WeightFn(4)).weight == 0
        assert solve_connect(empty_graph(3), empty_graph(2), WeightFn(4)) is None

    def test_connected_host_is_cheapest_injection(self):
        om = WeightFn(3, {(1, 4): 0, (0, 2): 1})
        sol = solve_connect(path_graph(5), EDGE, om)
        assert sol.weight == 0 and sorted(sol.phi.images()) == [1, 4]

    def test_cover_bound(self):
        with pytest.raises(CoverTooLarge):
            solve_connect(empty_graph(6), matching_graph(3), WeightFn(0), t_max=2)

    def test_tie_break_matches_oracle(self):
        g = empty_graph(3)
        h = path_graph(3)
        a = solve_connect(g, h, WeightFn(0))
        b = brute_force_optimum(g, h, WeightFn(0), 1)
        assert a.key() == b.key()

    def test_random_against_oracle(self):
        rng = random.Random(101)
        for _ in range(40):
            g, h, om = small_weighted_instance(rng, max_g=6, max_h=4)
            a = solve_connect(g, h, om)
            b = brute_force_optimum(g, h, om, 1)
            assert (a is None) == (b is None)
            if a is not None:
                assert a.weight == b.weight
                assert is_connected(superpose(g, h, a.phi))
                assert om.mapping_weight(h, a.phi) == a.weight

    def test_decision_is_monotone(self):
        rng = random.Random(7)
        for _ in range(10):
            g, h, om = small_weighted_instance(rng, max_g=6, max_h=4)
            answers = [decide_connect(g, h, om, w) for w in range(0, 10)]
            assert answers == sorted(answers)

    def test_star_on_forest(self):
        rng = random.Random(1)
        n = 9
        g = Graph(n, [(rng.randrange(v), v) for v in range(1, n) if v % 3])
        h = star_graph(4)
        om = WeightFn(2, {(u, v): (u * v) % 4 for u in range(n) for v in range(u + 1, n)})
        a = solve_connect(g, h, om)
        assert a.weight == brute_force_optimum(g, h, om, 1).weight


class TestAnchors:
    def test_single_cover_vertex(self):
        assert list(enumerate_anchor_sets(star_graph(3), [0])) == [()]

    def test_two_cover_vertices(self):
        # cover {0, 1}; the remaining three vertices give 1 + 3 + 3 subsets
        h = Graph(5, [(0, 1), (0, 2), (1, 3), (1, 4)])
        ys = list(enumerate_anchor_sets(h, [0, 1]))
        assert len(ys) == 7 and ys[0] == () and ys[-1] == (3, 4)

    def test_cover_is_everything(self):
        assert list(enumerate_anchor_sets(complete_graph(3), [0, 1, 2])) == [()]

    def test_edge_joins_isolated_vertices(self):
        got = list(enumerate_anchor_embeddings(empty_graph(2), EDGE, [0, 1]))
        assert got == [{0: 0, 1: 1}, {0: 1, 1: 0}]

    def test_edgeless_anchors_share_a_component(self):
        g = matching_graph(2)
        got = list(enumerate_anchor_embeddings(g, empty_graph(2), [0, 1]))
        assert len(got) == 4
        assert all(g.has_edge(p[0], p[1]) for p in got)

    def test_block_mode_closes_cycle(self):
        got = list(enumerate_anchor_embeddings(path_graph(3), EDGE, [0, 1], "block"))
        assert {0: 0, 1: 2} in got and {0: 0, 1: 1} not in got

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            list(enumerate_anchor_embeddings(EDGE, EDGE, [0], "nope"))


class TestExtend:
    def test_too_many_components(self):
        ctx = AnchorContext(X=(0,), Y=(), Z=(1,), psi={0: 0}, R=0)
        assert extend_by_matching(empty_graph(3), EDGE, ctx, WeightFn(1)) is None

    def test_nothing_to_place(self):
        om = WeightFn(1, {(0, 1): 6})
        ctx = AnchorContext(X=(0, 1), Y=(), Z=(), psi={0: 0, 1: 1}, R=6)
        ext = extend_by_matching(EDGE, EDGE, ctx, om)
        assert ext.solution.weight == 6 and ext.split.others == ()

    def test_star_center_anchored(self):
        # H = x - c - y with c on the edge 0-1 of G; 2 is isolated
        g = Graph(3, [(0, 1)])
        h = path_graph(3)
        om = WeightFn(4, {(0, 2): 1, (0, 1): 3})
        ctx = AnchorContext(X=(1,), Y=(), Z=(0, 2), psi={1: 0}, R=0)
        ext = extend_by_matching(g, h, ctx, om)
        # c pinned on 0: x, y take {1, 2} in some order and 2 must be hit
        want = min(om(0, a) + om(0, b) for a, b in [(1, 2), (2, 1)])
        assert ext.solution.weight == want == 4
        assert 2 in {ext.solution.phi.as_dict()[z] for z in (0, 2)}
