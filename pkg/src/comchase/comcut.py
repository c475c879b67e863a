"""Synthesis of sufficient commutativity conditions.

Given an acyclic quiver, `comcut` returns a list of bipaths whose generated
path relation is full.  It rebuilds the quiver arc by arc (vertices bottom-up
in reverse-topological labelling, arcs per vertex in increasing index order);
each added arc contributes one bipath per minimal common-descendant of its
endpoints.  Path reconstruction and accessibility both come from a square
first-arc matrix.  The result is sufficient but not always minimal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .pathrel import Bipath
from .quiver import Arc, Path, Quiver, relabel_quiver, topo_order


@dataclass(frozen=True)
class FirstArcMatrix:
    """Square matrix over vertices; entry (u, v) holds an arc index a such
    that some u -> v path starts with a, or None when no nontrivial path
    exists.  The diagonal conceptually denotes the empty path and is unused.
    """

    arcs: tuple[Arc, ...]
    entries: tuple[tuple[int | None, ...], ...]

    @staticmethod
    def empty(n: int, arcs: tuple[Arc, ...]) -> "FirstArcMatrix":
        return FirstArcMatrix(tuple(arcs), tuple((None,) * n for _ in range(n)))

    def entry(self, u: int, v: int) -> int | None:
        return self.entries[u][v]

    def accessible(self, u: int) -> set[int]:
        """Vertices reachable from u, including u itself."""
        acc = {v for v, e in enumerate(self.entries[u]) if e is not None}
        acc.add(u)
        return acc


def update_first_arc_matrix(m: FirstArcMatrix, a0: int, acc_v0: set[int]) -> FirstArcMatrix:
    """Record a newly added arc: every vertex accessible from its target is
    now reachable from its source starting with `a0`.  Listed entries are
    overwritten even when already populated; a path through `a0` exists either
    way."""
    u0 = m.arcs[a0][0]
    row = list(m.entries[u0])
    for v in acc_v0:
        if v != u0:
            row[v] = a0
    rows = list(m.entries)
    rows[u0] = tuple(row)
    return FirstArcMatrix(m.arcs, tuple(rows))


def extract_path(m: FirstArcMatrix, u: int, v: int) -> Path | None:
    """Follow first-arc entries from u until v; None when the chain runs dry."""
    steps: list[int] = []
    at = u
    while at != v:
        a = m.entry(at, v)
        if a is None:
            return None
        steps.append(a)
        at = m.arcs[a][1]
    return Path(u, v, tuple(steps))


def _comcut_sorted(q: Quiver) -> list[Bipath]:
    """Core recursion on a reverse-topologically sorted quiver (every arc
    (u, v) has u > v), expressed iteratively by re-adding arcs."""
    arcs_by_source: dict[int, list[int]] = {}
    for i, (s, _) in enumerate(q.arcs):
        arcs_by_source.setdefault(s, []).append(i)
    m = FirstArcMatrix.empty(q.n, q.arcs)
    out: list[Bipath] = []
    for u0 in range(q.n):
        for a0 in sorted(arcs_by_source.get(u0, ())):
            v0 = q.tgt(a0)
            acc_u0 = m.accessible(u0)
            acc_v0 = m.accessible(v0)
            meet = acc_u0 & acc_v0
            minimal = sorted(
                w for w in meet
                if not any(w != w2 and w in m.accessible(w2) for w2 in meet)
            )
            for w in minimal:
                p_w = extract_path(m, u0, w)
                q_w = extract_path(m, v0, w)
                assert p_w is not None and q_w is not None
                out.append(Bipath(u0, w, p_w.steps, (a0,) + q_w.steps))
            m = update_first_arc_matrix(m, a0, acc_v0)
    return out


def comcut(q: Quiver) -> list[Bipath]:
    """Bipaths whose closure is the full path relation of the acyclic quiver.

    Labels need not be pre-sorted: the quiver is normalized by a topological
    sort, processed, and the resulting endpoints mapped back.  Arc indices are
    unaffected by relabelling.
    """
    perm = topo_order(q)  # reverse-topological: every arc (u, v) gets u > v
    inv = perm.inverse().mapping
    sorted_q = relabel_quiver(q, perm)
    result = _comcut_sorted(sorted_q)
    return [Bipath(inv[b.u], inv[b.v], b.left, b.right) for b in result]
