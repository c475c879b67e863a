import random

import pytest

from comchase.errors import CapExceededError, CycleError, InvalidBipathError
from comchase.formulas import compQ, monoQ
from comchase.pathrel import (
    Bipath,
    closure,
    enumerate_bipaths,
    is_full,
    subquiver_bipaths,
)
from comchase.quiver import Quiver, Subquiver, all_paths, path_quiver
from conftest import FIVEQ, FIVE_SQUARES, random_acyclic_quiver


def canon(b: Bipath):
    c = b.canonical()
    return (c.u, c.v, c.left, c.right)


class TestEnumerateBipaths:
    def test_comp_triangle(self):
        got = [canon(b) for b in enumerate_bipaths(compQ)]
        assert got == [(0, 2, (1,), (0, 2))]

    def test_path_quiver_empty(self):
        assert enumerate_bipaths(path_quiver(3)) == []

    def test_parallel_arcs(self):
        got = [canon(b) for b in enumerate_bipaths(Quiver(2, ((0, 1), (0, 1))))]
        assert got == [(0, 1, (0,), (1,))]

    def test_cyclic_rejected(self):
        with pytest.raises(CycleError):
            enumerate_bipaths(Quiver(2, ((0, 1), (1, 0))))


class TestClosure:
    def test_single_generator_merges_pair(self):
        part = closure(compQ, [Bipath(0, 2, (1,), (0, 2))])
        assert part.same_class(0, 2, (1,), (0, 2))
        assert len(part.classes(0, 2)) == 1
        assert part.is_full()

    def test_empty_generators_discrete(self):
        part = closure(compQ, [])
        assert len(part.classes(0, 2)) == 2
        assert not part.is_full()

    def test_five_lemma_four_squares_full(self):
        gens = [b for a in FIVE_SQUARES for b in subquiver_bipaths(FIVEQ, a.sq)]
        assert closure(FIVEQ, gens).is_full()

    def test_invalid_bipath_rejected(self):
        with pytest.raises(InvalidBipathError):
            closure(compQ, [Bipath(0, 2, (2,), (1,))])

    def test_cap(self):
        with pytest.raises(CapExceededError):
            closure(compQ, [], cap=3)

    def test_monotone(self):
        rng = random.Random(5)
        for _ in range(40):
            q = random_acyclic_quiver(rng, max_n=5, max_arcs=7)
            bps = enumerate_bipaths(q)
            if len(bps) < 2:
                continue
            k = rng.randint(1, len(bps))
            sub = bps[: k // 2]
            sup = bps[:k]
            assert closure(q, sub).refines(closure(q, sup))

    def test_idempotent(self):
        rng = random.Random(6)
        for _ in range(40):
            q = random_acyclic_quiver(rng, max_n=5, max_arcs=7)
            bps = enumerate_bipaths(q)
            gens = bps[: len(bps) // 2]
            part = closure(q, gens)
            regen = [
                Bipath(u, v, cls[0], p)
                for (u, v) in part.endpoint_pairs()
                for cls in part.classes(u, v)
                for p in cls[1:]
            ]
            part2 = closure(q, regen)
            assert part.refines(part2) and part2.refines(part)

    def test_concatenation_stable(self):
        rng = random.Random(7)
        for _ in range(30):
            q = random_acyclic_quiver(rng, max_n=5, max_arcs=6)
            bps = enumerate_bipaths(q)
            part = closure(q, bps[: len(bps) // 2])
            for u in range(q.n):
                for v in range(q.n):
                    for w in range(q.n):
                        lefts = [p.steps for p in all_paths(q, u, v)]
                        rights = [p.steps for p in all_paths(q, v, w)]
                        if len(lefts) > 12 or len(rights) > 12:
                            continue
                        for p in lefts:
                            for p2 in lefts:
                                if not part.same_class(u, v, p, p2):
                                    continue
                                for r in rights:
                                    for r2 in rights:
                                        if part.same_class(v, w, r, r2):
                                            assert part.same_class(u, w, p + r, p2 + r2)

    def test_full_from_all_bipaths(self):
        rng = random.Random(8)
        for _ in range(50):
            q = random_acyclic_quiver(rng, max_n=5, max_arcs=7)
            part = closure(q, enumerate_bipaths(q))
            assert is_full(q, part)


class TestSubquiverBipaths:
    def test_triangle_inside_mono(self):
        sq = Subquiver((0, 1, 2), (0, 2, 3))
        got = [canon(b) for b in subquiver_bipaths(monoQ, sq)]
        assert got == [(0, 2, (2,), (0, 3))]

    def test_single_arc(self):
        assert subquiver_bipaths(monoQ, Subquiver((1, 2), (3,))) == []

    def test_identity_matches_enumeration(self):
        sq = Subquiver(tuple(range(monoQ.n)), tuple(range(len(monoQ.arcs))))
        assert [canon(b) for b in subquiver_bipaths(monoQ, sq)] == [
            canon(b) for b in enumerate_bipaths(monoQ)
        ]


class TestBipathJson:
    def test_round_trip(self):
        b = Bipath(0, 2, (0, 2), (1,))
        assert Bipath.from_json_dict(b.to_json_dict()) == b

    def test_shape(self):
        assert Bipath(0, 2, (0, 2), (1,)).to_json_dict() == {
            "u": 0,
            "v": 2,
            "left": [0, 2],
            "right": [1],
        }

    def test_partition_debug_dump(self):
        part = closure(compQ, [])
        dump = part.to_debug_dict()
        assert dump["0->2"] == [[[1]], [[0, 2]]]
