import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from comchase.errors import CycleError, RestrIllFormedError
from comchase.formulas import compQ, mapQ, monoQ
from comchase.quiver import (
    Path,
    Quiver,
    Subquiver,
    all_paths,
    identity_subquiver,
    is_acyclic,
    is_path,
    path_quiver,
    quiver_dual,
    quiver_restr,
    quiver_wf,
    reachable,
    relabel_quiver,
    subquiver_compose,
    subquiver_wf,
    to_dot,
    topo_order,
)
from conftest import NONMIN_Q, random_acyclic_quiver


quivers = st.builds(
    Quiver,
    st.integers(min_value=0, max_value=6),
    st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), max_size=8).map(tuple),
)


def wf_quivers():
    return quivers.filter(quiver_wf)


class TestWellFormed:
    def test_numbered_drawing(self):
        assert quiver_wf(Quiver(3, ((0, 1), (0, 2), (1, 2), (1, 2))))

    def test_empty(self):
        assert quiver_wf(Quiver(0, ()))

    def test_out_of_bound(self):
        assert not quiver_wf(Quiver(2, ((0, 3),)))


class TestDual:
    def test_map_quiver(self):
        assert quiver_dual(Quiver(2, ((0, 1),))) == Quiver(2, ((1, 0),))

    def test_no_arcs(self):
        assert quiver_dual(Quiver(3, ())) == Quiver(3, ())

    def test_involution_random(self):
        rng = random.Random(1)
        for _ in range(200):
            q = random_acyclic_quiver(rng)
            assert quiver_dual(quiver_dual(q)) == q

    @given(quivers)
    def test_involution_any(self, q):
        assert quiver_dual(quiver_dual(q)) == q


class TestRestriction:
    def test_mono_to_map(self):
        sq = Subquiver((1, 2), (3,))
        assert quiver_restr(sq, monoQ) == mapQ

    def test_identity(self):
        assert quiver_restr(identity_subquiver(monoQ), monoQ) == monoQ

    def test_parallel_pair_conclusion(self):
        sq = Subquiver((0, 1), (0, 1))
        assert quiver_restr(sq, monoQ) == Quiver(2, ((0, 1), (0, 1)))

    def test_ill_formed_raises(self):
        with pytest.raises(RestrIllFormedError):
            quiver_restr(Subquiver((0,), (3,)), mapQ)

    def test_missing_endpoint_rejected(self):
        assert not subquiver_wf(Subquiver((0,), (0,)), mapQ)

    @given(wf_quivers(), st.data())
    @settings(max_examples=100)
    def test_dual_commutes_with_restriction(self, q, data):
        if not q.arcs:
            arc_sel = []
        else:
            arc_sel = data.draw(st.lists(st.integers(0, len(q.arcs) - 1), max_size=4))
        verts = sorted({v for i in arc_sel for v in q.arcs[i]})
        extra = data.draw(st.lists(st.integers(0, max(q.n - 1, 0)), max_size=2)) if q.n else []
        verts = sorted(set(verts) | {v for v in extra if v < q.n})
        sq = Subquiver(tuple(verts), tuple(arc_sel))
        if not subquiver_wf(sq, q):
            return
        assert quiver_restr(sq, quiver_dual(q)) == quiver_dual(quiver_restr(sq, q))

    @given(wf_quivers(), st.data())
    @settings(max_examples=100)
    def test_restriction_preserves_wf(self, q, data):
        if not q.arcs:
            return
        arc_sel = data.draw(st.lists(st.integers(0, len(q.arcs) - 1), max_size=4))
        verts = tuple(sorted({v for i in arc_sel for v in q.arcs[i]}))
        sq = Subquiver(verts, tuple(arc_sel))
        if subquiver_wf(sq, q):
            assert quiver_wf(quiver_restr(sq, q))


class TestIsPath:
    def test_composite_route(self):
        assert is_path(compQ, 0, (0, 2), 2)

    def test_empty_path(self):
        assert is_path(compQ, 1, (), 1)

    def test_wrong_start(self):
        assert not is_path(compQ, 0, (2,), 2)


class TestTopoOrder:
    def test_nonmin_already_sorted(self):
        assert topo_order(NONMIN_Q).is_identity()

    def test_singleton(self):
        assert topo_order(Quiver(1, ())).is_identity()

    def test_two_cycle(self):
        with pytest.raises(CycleError):
            topo_order(Quiver(2, ((0, 1), (1, 0))))

    def test_relabelled_arcs_decrease(self):
        rng = random.Random(7)
        for _ in range(100):
            q = random_acyclic_quiver(rng)
            perm = topo_order(q)
            sorted_q = relabel_quiver(q, perm)
            assert all(s > t for s, t in sorted_q.arcs)
            inv = perm.inverse()
            assert all(inv.mapping[perm.mapping[v]] == v for v in range(q.n))


class TestAllPaths:
    def test_comp_triangle(self):
        assert [p.steps for p in all_paths(compQ, 0, 2)] == [(1,), (0, 2)]

    def test_same_endpoint(self):
        assert [p.steps for p in all_paths(compQ, 1, 1)] == [()]

    def test_path_quiver_unique(self):
        pq3 = path_quiver(3)
        assert [p.steps for p in all_paths(pq3, 0, 3)] == [(0, 1, 2)]

    def test_cycle_rejected(self):
        with pytest.raises(CycleError):
            all_paths(Quiver(2, ((0, 1), (1, 0))), 0, 1)

    def test_matches_naive_enumeration(self):
        rng = random.Random(3)
        for _ in range(100):
            q = random_acyclic_quiver(rng)
            for u in range(q.n):
                for v in range(q.n):
                    got = {p.steps for p in all_paths(q, u, v)}
                    assert got == set(_naive_paths(q, u, v))
                    for p in all_paths(q, u, v):
                        assert is_path(q, p.u, p.steps, p.v)


def _naive_paths(q, u, v):
    # breadth-first enumeration, independent of the production search
    out = []
    frontier = [(u, ())]
    while frontier:
        nxt = []
        for at, steps in frontier:
            if at == v:
                out.append(steps)
            for i, (s, t) in enumerate(q.arcs):
                if s == at:
                    nxt.append((t, steps + (i,)))
        frontier = nxt
    return out


class TestReachable:
    def test_nonmin_from_3(self):
        assert reachable(NONMIN_Q, 3) == {3, 2, 1, 0}

    def test_isolated(self):
        assert reachable(Quiver(2, ()), 1) == {1}

    def test_nonmin_without_top_arc(self):
        q = Quiver(5, tuple(a for a in NONMIN_Q.arcs if a != (4, 3)))
        assert reachable(q, 4) == {4, 2, 1, 0}


class TestPathQuiver:
    def test_zero(self):
        assert path_quiver(0) == Quiver(1, ())

    def test_one_is_map_quiver(self):
        assert path_quiver(1) == mapQ

    def test_three(self):
        assert path_quiver(3) == Quiver(4, ((0, 1), (1, 2), (2, 3)))

    def test_single_path_count(self):
        for k in range(6):
            assert len(all_paths(path_quiver(k), 0, k)) == 1


class TestSubquiverCompose:
    def test_left_unit(self):
        inner = identity_subquiver(monoQ)
        outer = Subquiver((1, 2), (3,))
        assert subquiver_compose(monoQ, outer, inner) == outer

    def test_right_unit(self):
        inner = Subquiver((1, 2), (3,))
        outer = identity_subquiver(quiver_restr(inner, monoQ))
        assert subquiver_compose(monoQ, outer, inner) == inner

    def test_nested_selection(self):
        inner = Subquiver((0, 1, 2), (0, 2, 3))
        outer = Subquiver((1, 2), (2,))
        assert subquiver_compose(monoQ, outer, inner) == Subquiver((1, 2), (3,))

    def test_post_condition_random(self):
        rng = random.Random(11)
        checked = 0
        while checked < 60:
            q = random_acyclic_quiver(rng, max_n=5, max_arcs=6)
            if not q.arcs:
                continue
            inner_arcs = sorted(rng.sample(range(len(q.arcs)), rng.randint(1, len(q.arcs))))
            inner_verts = sorted({v for i in inner_arcs for v in q.arcs[i]})
            inner = Subquiver(tuple(inner_verts), tuple(inner_arcs))
            mid = quiver_restr(inner, q)
            if not mid.arcs:
                continue
            outer_arcs = sorted(rng.sample(range(len(mid.arcs)), rng.randint(1, len(mid.arcs))))
            outer_verts = sorted({v for i in outer_arcs for v in mid.arcs[i]})
            outer = Subquiver(tuple(outer_verts), tuple(outer_arcs))
            composed = subquiver_compose(q, outer, inner)
            assert quiver_restr(composed, q) == quiver_restr(outer, mid)
            checked += 1


class TestDegenerate:
    def test_empty_quiver_everywhere(self):
        q = Quiver(0, ())
        assert quiver_wf(q)
        assert topo_order(q).mapping == ()
        assert is_acyclic(q)


class TestDot:
    def test_node_and_edge_lines(self):
        dot = to_dot(compQ)
        assert "digraph" in dot
        for v in range(3):
            assert f"  {v};" in dot
        assert '0 -> 1 [label="0"];' in dot
        assert '1 -> 2 [label="2"];' in dot

    def test_highlight(self):
        dot = to_dot(mapQ, {0: "red"})
        assert 'color="red"' in dot


class TestJson:
    def test_quiver_round_trip(self):
        assert Quiver.from_json_dict(compQ.to_json_dict()) == compQ

    def test_subquiver_round_trip(self):
        sq = Subquiver((1, 2), (3,))
        assert Subquiver.from_json_dict(sq.to_json_dict()) == sq

    def test_quiver_json_shape(self):
        assert compQ.to_json_dict() == {"n": 3, "arcs": [[0, 1], [0, 2], [1, 2]]}
