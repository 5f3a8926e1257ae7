import itertools

import pytest

import oracles
from conftest import FALSE_COMPLEMENTED_CLAIM, permuted
from zdgraph import (
    Caps,
    Graph,
    NoVertices,
    SameVertex,
    SizeLimitExceeded,
    UnknownVertex,
    build_graph,
    clique_number,
    complementation_verdict,
    graph_of_power_set,
    isomorphic,
    orthogonal,
    power_set_semigroup,
    reduce,
    zn_multiplicative,
)
from zdgraph.paper_check import el


@pytest.fixture(scope="module")
def g32(s32):
    return build_graph(s32)


class TestOrthogonal:
    def test_case_one(self, g32):
        assert orthogonal(g32, el((), 1), el((1, 2, 3), 0))

    def test_u_perp_w(self, g32):
        assert orthogonal(g32, el((), 2), el((1, 2, 3), 2))

    def test_triangle_edge_not_orthogonal(self, g32):
        assert not orthogonal(g32, el((1,), 0), el((2,), 0))
        assert g32.adjacent(el((3,), 0), el((1,), 0))

    def test_errors(self, g32):
        with pytest.raises(SameVertex):
            orthogonal(g32, el((), 2), el((), 2))
        with pytest.raises(UnknownVertex):
            orthogonal(g32, 0, el((), 2))

    def test_matches_unfolding(self, s32, g32):
        nb = oracles.neighborhoods(oracles.table_of(s32), s32.zero)
        for a, b in itertools.permutations(g32.vertices, 2):
            assert orthogonal(g32, a, b) == oracles.orthogonal(nb, a, b)


class TestComplementation:
    @FALSE_COMPLEMENTED_CLAIM
    def test_counterexample_graph_complemented(self, g32):
        assert complementation_verdict(g32).complemented

    def test_counterexample_graph_actual_verdict(self, s32, g32):
        v = complementation_verdict(g32)
        nb = oracles.neighborhoods(oracles.table_of(s32), s32.zero)
        assert (v.complemented, v.uniquely_complemented) == oracles.complementation(nb) == (False, False)
        assert v.uncomplemented_witness == el((1,), 2)
        assert v.check(g32)

    def test_counterexample_nonunique_witness(self, g32):
        v = complementation_verdict(g32)
        assert v.nonunique_witness == (el((), 2), el((1, 2, 3), 0), el((1, 2, 3), 2))

    def test_z4_single_isolated_vertex(self):
        g = build_graph(zn_multiplicative(4))
        v = complementation_verdict(g)
        assert not v.complemented
        assert v.uncomplemented_witness == 2
        assert not v.uniquely_complemented

    def test_empty_graph_vacuous(self):
        v = complementation_verdict(build_graph(power_set_semigroup(1)))
        assert v.complemented and v.uniquely_complemented
        assert v.uncomplemented_witness is None and v.nonunique_witness is None

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_power_sets_uniquely_complemented(self, n):
        v = complementation_verdict(graph_of_power_set(n))
        assert v.complemented and v.uniquely_complemented


class TestReduce:
    def test_one_and_three_merge(self, g32):
        r = reduce(g32)
        for X in [(), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3)]:
            assert r.class_of(el(X, 1)) == r.class_of(el(X, 3))

    def test_counterexample_count(self, g32):
        assert len(reduce(g32)) == 22

    def test_matches_oracle(self, s32, g32):
        nb = oracles.neighborhoods(oracles.table_of(s32), s32.zero)
        assert {frozenset(c) for c in reduce(g32).classes} == oracles.reduced_partition(nb)

    def test_distinct_neighborhoods_give_identity(self):
        g = graph_of_power_set(3)
        r = reduce(g)
        assert r.classes == tuple((v,) for v in g.vertices)
        assert r.adj == g.adj

    def test_representatives_lowest(self, g32):
        r = reduce(g32)
        assert all(rep == min(c) for rep, c in zip(r.representatives, r.classes))
        reps = list(r.representatives)
        assert reps == sorted(reps)

    def test_idempotent(self, g32):
        r = reduce(g32)
        rr = reduce(r)
        assert len(rr) == len(r)
        assert all(len(c) == 1 for c in rr.classes)

    def test_json(self, g32):
        doc = reduce(g32).to_json_dict()
        assert len(doc["classes"]) == 22
        assert doc["classes"][0] == ["(∅, 1̅)", "(∅, 3̅)"]


class TestClique:
    def test_counterexample_graph_at_least_three(self, g32):
        assert clique_number(g32).size >= 3

    def test_counterexample_graph_is_four(self, s32, g32):
        # oracle: a 4-clique exists and no 5-subset of the 29 vertices is a clique
        nb = oracles.neighborhoods(oracles.table_of(s32), s32.zero)
        assert oracles.is_clique(nb, [el((1,), 0), el((2,), 0), el((3,), 0), el((), 2)])
        assert not any(oracles.is_clique(nb, c) for c in itertools.combinations(nb, 5))
        cert = clique_number(g32)
        assert cert.size == 4 and cert.check(g32)

    def test_edgeless(self):
        g = Graph.from_edges(3, [])
        assert clique_number(g).size == 1

    def test_empty_graph_errors(self):
        with pytest.raises(NoVertices):
            clique_number(Graph.from_edges(0, []))

    def test_cap(self, g32):
        with pytest.raises(SizeLimitExceeded):
            clique_number(g32, caps=Caps(clique=10))

    def test_power_set_four(self):
        g = graph_of_power_set(4)
        nb = {v: set(g.neighbors(v)) for v in g.vertices}
        assert oracles.clique_number(nb) == 4
        assert clique_number(g).size == 4


class TestIsomorphic:
    def test_reduced_vs_p4(self, g32):
        res = isomorphic(reduce(g32), graph_of_power_set(4))
        assert not res
        assert "vertex counts" in res.reason

    def test_self_identity(self, g32):
        res = isomorphic(g32, g32)
        assert res and res.mapping == {v: v for v in g32.vertices}

    def test_p3_vs_its_reduction(self):
        g = graph_of_power_set(3)
        nb = {v: g.neighbors(v) for v in g.vertices}
        assert len(set(nb.values())) == len(nb)  # all neighborhoods distinct
        r = reduce(g)
        res = isomorphic(g, r)
        assert res
        assert res.mapping == {v: i for i, v in enumerate(g.vertices)}

    def test_non_isomorphic_same_degrees(self):
        # 6-cycle versus two triangles: same counts and degree sequence
        c6 = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
        tt = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
        assert not isomorphic(c6, tt)
        assert not oracles.isomorphic(6, oracles.edge_set(c6), 6, oracles.edge_set(tt))

    def test_permuted_copy(self):
        g = graph_of_power_set(4)
        h = permuted(g, [13, 2, 5, 0, 7, 11, 1, 12, 3, 9, 4, 10, 6, 8])
        res = isomorphic(g, h)
        assert res
        for u, v in itertools.combinations(g.vertices, 2):
            assert g.adjacent(u, v) == h.adjacent(res.mapping[u], res.mapping[v])

    def test_cap(self):
        big = graph_of_power_set(7)
        with pytest.raises(SizeLimitExceeded):
            isomorphic(big, big)


class TestPowerSetGraph:
    @pytest.mark.parametrize("n,count", [(1, 0), (2, 2), (3, 6), (4, 14), (5, 30)])
    def test_counts(self, n, count):
        assert len(graph_of_power_set(n)) == count == 2**n - 2

    def test_limit(self):
        with pytest.raises(SizeLimitExceeded):
            graph_of_power_set(13)
