"""Commutativity merging: decide that assumed-commutative subdiagrams force
the whole acyclic diagram to commute.

For each vertex pair (u, v) the procedure builds a multigraph on the frontier
arcs (arcs leaving u towards v and arcs entering v from u) and accepts only if
every such graph is connected.  Connectivity certifies that the generated path
relation relates all u -> v paths; the procedure is sound but not claimed
complete.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IllFormedError
from .pathrel import Bipath, validate_bipath
from .quiver import (
    Quiver,
    Subquiver,
    VertexPermutation,
    quiver_restr,
    reachable,
    relabel_quiver,
    subquiver_wf,
    topo_order,
)


@dataclass(frozen=True)
class SubquiverAssm:
    """The subdiagram selected by `sq` commutes."""

    sq: Subquiver


@dataclass(frozen=True)
class BipathAssm:
    """The two paths of `bipath` are related."""

    bipath: Bipath


Assumption = SubquiverAssm | BipathAssm


@dataclass(frozen=True)
class FrontierGraph:
    u: int
    v: int
    nodes: frozenset[int]
    edges: frozenset[tuple[int, int]]

    def components(self) -> list[frozenset[int]]:
        parent = {x: x for x in self.nodes}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[rb] = ra
        groups: dict[int, set[int]] = {}
        for x in self.nodes:
            groups.setdefault(find(x), set()).add(x)
        return sorted((frozenset(g) for g in groups.values()), key=min)

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


def validate_assumption(q: Quiver, assm: Assumption) -> None:
    if isinstance(assm, SubquiverAssm):
        if not subquiver_wf(assm.sq, q):
            raise IllFormedError(f"assumption subquiver {assm.sq} invalid for host")
    elif isinstance(assm, BipathAssm):
        validate_bipath(q, assm.bipath)
    else:
        raise IllFormedError(f"unknown assumption {assm!r}")


def dual_assumption(assm: Assumption) -> Assumption:
    """Assumptions read in the dual quiver: subquivers carry over unchanged,
    bipaths reverse."""
    if isinstance(assm, SubquiverAssm):
        return assm
    return BipathAssm(assm.bipath.reversed())


def relabel_assumption(assm: Assumption, perm: VertexPermutation) -> Assumption:
    m = perm.mapping
    if isinstance(assm, SubquiverAssm):
        return SubquiverAssm(Subquiver(tuple(m[v] for v in assm.sq.vertices), assm.sq.arc_indices))
    b = assm.bipath
    return BipathAssm(Bipath(m[b.u], m[b.v], b.left, b.right))


def _reach_table(q: Quiver) -> list[frozenset[int]]:
    return [reachable(q, u) for u in range(q.n)]


def frontier_arcs(q: Quiver, u: int, v: int, reach: list[frozenset[int]] | None = None) -> tuple[frozenset[int], frozenset[int]]:
    """Arcs starting a u -> v path, and arcs ending one."""
    topo_order(q)  # cycle check
    if reach is None:
        reach = _reach_table(q)
    starting = frozenset(i for i, (s, t) in enumerate(q.arcs) if s == u and v in reach[t])
    ending = frozenset(i for i, (s, t) in enumerate(q.arcs) if t == v and s in reach[u])
    return starting, ending


def build_frontier_graph(q: Quiver, assms: list[Assumption], u: int, v: int,
                         reach: list[frozenset[int]] | None = None) -> FrontierGraph:
    """Multigraph on the frontier arcs of (u, v).

    Two frontier arcs are joined when some u -> v path of the host contains
    both, or when an assumption relates paths containing them: for a
    commuting-subquiver assumption, all frontier arcs lying on a u -> v path
    inside the subquiver form a clique; for a bipath assumption with these
    extremities, every frontier arc of one side joins every frontier arc of
    the other.
    """
    if reach is None:
        topo_order(q)
        reach = _reach_table(q)
    for a in assms:
        validate_assumption(q, a)
    starting, ending = frontier_arcs(q, u, v, reach)
    nodes = starting | ending
    edges: set[tuple[int, int]] = set()

    def add_edge(a: int, b: int) -> None:
        if a != b:
            edges.add((min(a, b), max(a, b)))

    # shared-path rule: e1 then e2 on one u -> v path, or the reverse order;
    # reachability is reflexive, so immediate adjacency is covered
    node_list = sorted(nodes)
    for i, e1 in enumerate(node_list):
        for e2 in node_list[i + 1:]:
            s1, t1 = q.arcs[e1]
            s2, t2 = q.arcs[e2]
            first_then_second = s1 in reach[u] and s2 in reach[t1] and v in reach[t2]
            second_then_first = s2 in reach[u] and s1 in reach[t2] and v in reach[t1]
            if first_then_second or second_then_first:
                add_edge(e1, e2)

    for assm in assms:
        if isinstance(assm, SubquiverAssm):
            sq = assm.sq
            sub_arcs = set(sq.arc_indices)
            # reachability inside the selected arc set, on host labels
            out: dict[int, list[int]] = {}
            for i in sub_arcs:
                s, t = q.arcs[i]
                out.setdefault(s, []).append(t)

            def sub_reach(x: int) -> set[int]:
                seen = {x}
                stack = [x]
                while stack:
                    y = stack.pop()
                    for t in out.get(y, ()):
                        if t not in seen:
                            seen.add(t)
                            stack.append(t)
                return seen

            ru = sub_reach(u)
            into_v = {x for x in range(q.n) if v in sub_reach(x)}
            clique = [
                i for i in nodes
                if i in sub_arcs and q.src(i) in ru and q.tgt(i) in into_v
            ]
            for i in range(len(clique)):
                for j in range(i + 1, len(clique)):
                    add_edge(clique[i], clique[j])
        else:
            b = assm.bipath
            if (b.u, b.v) == (u, v):
                left_nodes = [i for i in b.left if i in nodes]
                right_nodes = [i for i in b.right if i in nodes]
                for a in left_nodes:
                    for c in right_nodes:
                        add_edge(a, c)

    return FrontierGraph(u, v, frozenset(nodes), frozenset(edges))


def commerge(q: Quiver, assms: list[Assumption]) -> bool:
    """True only if the closure of the assumptions' bipaths is full.

    Labels are normalized by a topological sort first; pairs with an empty
    frontier (at most one path, or u == v) are vacuously accepted.
    """
    verdict, _failing = _commerge_core(q, assms)
    return verdict


def commerge_report(q: Quiver, assms: list[Assumption]) -> tuple[bool, list[dict]]:
    """Same verdict as `commerge`, plus one entry per disconnected pair with
    its components as arc-index sets (host labels)."""
    return _commerge_core(q, assms)


def _commerge_core(q: Quiver, assms: list[Assumption]) -> tuple[bool, list[dict]]:
    for a in assms:
        validate_assumption(q, a)
    perm = topo_order(q)  # raises CycleError on cyclic input
    sorted_q = relabel_quiver(q, perm)
    sorted_assms = [relabel_assumption(a, perm) for a in assms]
    inv = perm.inverse().mapping
    reach = _reach_table(sorted_q)
    failing: list[dict] = []
    for u in range(sorted_q.n):
        for v in range(sorted_q.n):
            if u == v:
                continue
            g = build_frontier_graph(sorted_q, sorted_assms, u, v, reach)
            if not g.nodes:
                continue
            comps = g.components()
            if len(comps) > 1:
                failing.append(
                    {
                        "u": inv[u],
                        "v": inv[v],
                        "components": [sorted(c) for c in comps],
                    }
                )
    failing.sort(key=lambda d: (d["u"], d["v"]))
    return not failing, failing
