from __future__ import annotations

import random

import pytest

from comchase.commerge import BipathAssm, SubquiverAssm
from comchase.pathrel import Bipath
from comchase.quiver import Quiver, Subquiver, all_paths, subquiver_spanning_arcs

NONMIN_Q = Quiver(5, ((1, 0), (2, 0), (3, 0), (3, 1), (3, 2), (4, 0), (4, 1), (4, 2), (4, 3)))

SQUARE = Quiver(4, ((1, 0), (2, 0), (3, 1), (3, 2)))

# the five-lemma shape: two rows of five, downward maps, arcs in ascending
# lexicographic order
FIVEQ = Quiver(
    10,
    tuple(sorted(
        [(i, i + 1) for i in range(4)]
        + [(5 + i, 6 + i) for i in range(4)]
        + [(i, 5 + i) for i in range(5)]
    )),
)


def five_square(i: int) -> Subquiver:
    want = {(i, i + 1), (i, 5 + i), (i + 1, 6 + i), (5 + i, 6 + i)}
    idx = tuple(j for j, a in enumerate(FIVEQ.arcs) if a in want)
    return Subquiver(tuple(sorted({i, i + 1, 5 + i, 6 + i})), idx)


FIVE_SQUARES = [SubquiverAssm(five_square(i)) for i in range(4)]


@pytest.fixture
def nonmin() -> Quiver:
    return NONMIN_Q


@pytest.fixture
def fiveq() -> Quiver:
    return FIVEQ


def random_acyclic_quiver(rng: random.Random, max_n: int = 6, max_arcs: int = 10) -> Quiver:
    """Random acyclic multigraph with shuffled labels (not pre-sorted)."""
    n = rng.randint(1, max_n)
    order = list(range(n))
    rng.shuffle(order)
    rank = {v: i for i, v in enumerate(order)}
    arcs = []
    if n >= 2:
        for _ in range(rng.randint(0, max_arcs)):
            u, v = rng.sample(range(n), 2)
            if rank[u] > rank[v]:
                u, v = v, u
            arcs.append((u, v))
    return Quiver(n, tuple(arcs))


def random_assumptions(rng: random.Random, q: Quiver) -> list:
    out = []
    for _ in range(rng.randint(0, 3)):
        if q.arcs and rng.random() < 0.7:
            k = rng.randint(1, min(4, len(q.arcs)))
            idx = sorted(rng.sample(range(len(q.arcs)), k))
            out.append(SubquiverAssm(subquiver_spanning_arcs(q, idx)))
        else:
            pairs = [
                (u, v)
                for u in range(q.n)
                for v in range(q.n)
                if u != v and len(all_paths(q, u, v)) >= 2
            ]
            if pairs:
                u, v = rng.choice(pairs)
                a, b = rng.sample(all_paths(q, u, v), 2)
                out.append(BipathAssm(Bipath(u, v, a.steps, b.steps)))
    return out
