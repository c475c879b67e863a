import random

import pytest

from comchase.commerge import (
    BipathAssm,
    SubquiverAssm,
    build_frontier_graph,
    commerge,
    commerge_report,
    dual_assumption,
    frontier_arcs,
    relabel_assumption,
)
from comchase.errors import CycleError, IllFormedError
from comchase.formulas import compQ
from comchase.pathrel import Bipath, closure, subquiver_bipaths
from comchase.quiver import (
    Quiver,
    Subquiver,
    VertexPermutation,
    identity_subquiver,
    path_quiver,
    quiver_dual,
    relabel_quiver,
)
from conftest import FIVEQ, FIVE_SQUARES, random_acyclic_quiver, random_assumptions


def expand(q, assms):
    gens = []
    for a in assms:
        if isinstance(a, SubquiverAssm):
            gens.extend(subquiver_bipaths(q, a.sq))
        else:
            gens.append(a.bipath)
    return gens


class TestFrontierArcs:
    def test_comp_triangle(self):
        assert frontier_arcs(compQ, 0, 2) == ({0, 1}, {1, 2})

    def test_same_vertex(self):
        assert frontier_arcs(compQ, 1, 1) == (frozenset(), frozenset())

    def test_path_quiver(self):
        assert frontier_arcs(path_quiver(3), 0, 3) == ({0}, {2})

    def test_cyclic_rejected(self):
        with pytest.raises(CycleError):
            frontier_arcs(Quiver(2, ((0, 1), (1, 0))), 0, 1)


class TestFrontierGraph:
    def test_identity_assumption_connects(self):
        g = build_frontier_graph(compQ, [SubquiverAssm(identity_subquiver(compQ))], 0, 2)
        assert g.nodes == {0, 1, 2}
        assert g.is_connected()

    def test_no_assumptions_disconnected(self):
        g = build_frontier_graph(compQ, [], 0, 2)
        assert g.nodes == {0, 1, 2}
        assert g.edges == {(0, 2)}
        assert [set(c) for c in g.components()] == [{0, 2}, {1}]

    def test_single_path_clique(self):
        g = build_frontier_graph(path_quiver(3), [], 0, 3)
        assert g.nodes == {0, 2}
        assert g.is_connected()

    def test_bipath_assumption_links_sides(self):
        b = BipathAssm(Bipath(0, 2, (1,), (0, 2)))
        g = build_frontier_graph(compQ, [b], 0, 2)
        assert g.is_connected()


class TestCommerge:
    def test_five_lemma_four_squares(self):
        assert commerge(FIVEQ, FIVE_SQUARES) is True

    def test_path_quiver_no_assumptions(self):
        assert commerge(path_quiver(4), []) is True

    def test_parallel_arcs_false(self):
        assert commerge(Quiver(2, ((0, 1), (0, 1))), []) is False

    def test_cyclic_rejected(self):
        with pytest.raises(CycleError):
            commerge(Quiver(2, ((0, 1), (1, 0))), [])

    def test_ill_formed_assumption_rejected(self):
        with pytest.raises(IllFormedError):
            commerge(compQ, [SubquiverAssm(Subquiver((0,), (9,)))])

    def test_three_of_four_squares_fail(self):
        for drop in range(4):
            sub = [FIVE_SQUARES[j] for j in range(4) if j != drop]
            assert commerge(FIVEQ, sub) is False
            assert not closure(FIVEQ, expand(FIVEQ, sub)).is_full()


class TestCommergeReport:
    def test_comp_triangle_components(self):
        verdict, failing = commerge_report(compQ, [])
        assert verdict is False
        assert failing == [{"u": 0, "v": 2, "components": [[0, 2], [1]]}]

    def test_five_lemma_empty_failures(self):
        verdict, failing = commerge_report(FIVEQ, FIVE_SQUARES)
        assert verdict is True and failing == []

    def test_report_pairs_sorted(self):
        rng = random.Random(2)
        for _ in range(20):
            q = random_acyclic_quiver(rng)
            _, failing = commerge_report(q, [])
            keys = [(f["u"], f["v"]) for f in failing]
            assert keys == sorted(keys)


class TestSoundness:
    def test_sweep_against_oracle(self):
        rng = random.Random(20260809)
        for _ in range(500):
            q = random_acyclic_quiver(rng)
            assms = random_assumptions(rng, q)
            if commerge(q, assms):
                assert closure(q, expand(q, assms)).is_full()

    def test_monotone_in_assumptions(self):
        rng = random.Random(31)
        for _ in range(150):
            q = random_acyclic_quiver(rng)
            assms = random_assumptions(rng, q)
            extra = random_assumptions(rng, q)
            if commerge(q, assms):
                assert commerge(q, assms + extra)

    def test_relabelling_invariance(self):
        rng = random.Random(32)
        for _ in range(150):
            q = random_acyclic_quiver(rng)
            assms = random_assumptions(rng, q)
            labels = list(range(q.n))
            rng.shuffle(labels)
            perm = VertexPermutation(tuple(labels))
            rq = relabel_quiver(q, perm)
            rassms = [relabel_assumption(a, perm) for a in assms]
            assert commerge(q, assms) == commerge(rq, rassms)

    def test_duality_invariance(self):
        rng = random.Random(33)
        for _ in range(150):
            q = random_acyclic_quiver(rng)
            assms = random_assumptions(rng, q)
            dq = quiver_dual(q)
            dassms = [dual_assumption(a) for a in assms]
            assert commerge(q, assms) == commerge(dq, dassms)

    def test_completeness_statistic_reported(self, capsys):
        # agreement with the oracle in the reverse direction is recorded,
        # never asserted
        rng = random.Random(34)
        total = agree = 0
        for _ in range(200):
            q = random_acyclic_quiver(rng)
            assms = random_assumptions(rng, q)
            full = closure(q, expand(q, assms)).is_full()
            if full:
                total += 1
                if commerge(q, assms):
                    agree += 1
        print(f"\ncommerge completeness statistic: {agree}/{total} full cases accepted")
        assert total > 0
