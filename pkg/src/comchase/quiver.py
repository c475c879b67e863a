"""Finite quivers: well-formedness, duality, restriction, paths, reachability.

A quiver is a finite directed multigraph whose vertices are the integers
0..n-1 and whose arcs are an ordered sequence of (source, target) pairs.
The index of an arc in that sequence is its identity: duplicates are
permitted and meaningful.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable

from .errors import CycleError, IllFormedError, RestrIllFormedError

Arc = tuple[int, int]


@dataclass(frozen=True)
class Quiver:
    n: int
    arcs: tuple[Arc, ...]

    def __post_init__(self):
        object.__setattr__(self, "arcs", tuple((int(s), int(t)) for s, t in self.arcs))

    def src(self, i: int) -> int:
        return self.arcs[i][0]

    def tgt(self, i: int) -> int:
        return self.arcs[i][1]

    def to_json_dict(self) -> dict:
        return {"n": self.n, "arcs": [list(a) for a in self.arcs]}

    @staticmethod
    def from_json_dict(d: dict) -> "Quiver":
        return Quiver(int(d["n"]), tuple((int(a[0]), int(a[1])) for a in d["arcs"]))


@dataclass(frozen=True)
class Subquiver:
    """An embedding-style selection from a host quiver.

    `vertices` lists the selected vertex labels (duplicate-free); `arc_indices`
    lists indices into the host's arc sequence.  Restriction relabels every
    vertex to its position in `vertices`.  Arc indices may repeat or appear in
    any order; the restricted quiver lists them in the order given.
    """

    vertices: tuple[int, ...]
    arc_indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        object.__setattr__(self, "arc_indices", tuple(int(i) for i in self.arc_indices))

    def to_json_dict(self) -> dict:
        return {"v": list(self.vertices), "a": list(self.arc_indices)}

    @staticmethod
    def from_json_dict(d: dict) -> "Subquiver":
        return Subquiver(tuple(int(v) for v in d["v"]), tuple(int(i) for i in d["a"]))


@dataclass(frozen=True)
class Path:
    """A chain of adjacent arcs from u to v, given by its arc indices."""

    u: int
    v: int
    steps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(int(s) for s in self.steps))


@dataclass(frozen=True)
class VertexPermutation:
    """A bijection on 0..n-1; mapping[old_label] = new_label."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(int(x) for x in self.mapping))
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise IllFormedError(f"not a permutation: {self.mapping}")

    def inverse(self) -> "VertexPermutation":
        inv = [0] * len(self.mapping)
        for old, new in enumerate(self.mapping):
            inv[new] = old
        return VertexPermutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.mapping))


def quiver_wf(q: Quiver) -> bool:
    """Every arc endpoint must name an existing vertex."""
    return q.n >= 0 and all(0 <= s < q.n and 0 <= t < q.n for s, t in q.arcs)


def quiver_dual(q: Quiver) -> Quiver:
    """Same vertices, every arc reversed; arc indices are preserved."""
    return Quiver(q.n, tuple((t, s) for s, t in q.arcs))


def subquiver_wf(sq: Subquiver, q: Quiver) -> bool:
    """Validity of a selection: arc indices in bound, vertices duplicate-free
    and in bound, and every endpoint of a selected arc among the vertices."""
    if not all(0 <= i < len(q.arcs) for i in sq.arc_indices):
        return False
    if len(set(sq.vertices)) != len(sq.vertices):
        return False
    if not all(0 <= v < q.n for v in sq.vertices):
        return False
    vs = set(sq.vertices)
    return all(q.src(i) in vs and q.tgt(i) in vs for i in sq.arc_indices)


def quiver_restr(sq: Subquiver, q: Quiver) -> Quiver:
    """Select the given vertices and arcs, relabelling each vertex to its
    position in `sq.vertices`.

    Raises RestrIllFormedError when the selection is invalid; callers in the
    formula layer translate this into a sort error.
    """
    if not subquiver_wf(sq, q):
        raise RestrIllFormedError(f"subquiver {sq} invalid for quiver with n={q.n}, {len(q.arcs)} arcs")
    pos = {v: i for i, v in enumerate(sq.vertices)}
    return Quiver(len(sq.vertices), tuple((pos[q.src(i)], pos[q.tgt(i)]) for i in sq.arc_indices))


def identity_subquiver(q: Quiver) -> Subquiver:
    return Subquiver(tuple(range(q.n)), tuple(range(len(q.arcs))))


def subquiver_spanning_arcs(q: Quiver, arc_indices: Iterable[int]) -> Subquiver:
    """Subquiver selecting the given arcs, with vertices the ascending set of
    their endpoints (the shorthand used when describing selections by arcs only)."""
    idx = tuple(int(i) for i in arc_indices)
    if not all(0 <= i < len(q.arcs) for i in idx):
        raise RestrIllFormedError(f"arc indices {idx} out of bound")
    vs = sorted({e for i in idx for e in q.arcs[i]})
    return Subquiver(tuple(vs), idx)


def subquiver_compose(host: Quiver, outer: Subquiver, inner: Subquiver) -> Subquiver:
    """Flatten a nested selection: the result selects from `host` exactly what
    `outer` selects from `quiver_restr(inner, host)`, preserving vertex order."""
    restricted = quiver_restr(inner, host)  # raises if inner invalid
    if not subquiver_wf(outer, restricted):
        raise RestrIllFormedError(f"outer selection {outer} invalid for restricted quiver")
    vertices = tuple(inner.vertices[x] for x in outer.vertices)
    arc_indices = tuple(inner.arc_indices[j] for j in outer.arc_indices)
    return Subquiver(vertices, arc_indices)


def is_path(q: Quiver, u: int, steps: Iterable[int], v: int) -> bool:
    """True iff `steps` are in-bound arc indices chaining from u to v.

    The empty sequence is a path exactly when u == v.
    """
    steps = tuple(steps)
    if not all(0 <= i < len(q.arcs) for i in steps):
        return False
    at = u
    for i in steps:
        if q.src(i) != at:
            return False
        at = q.tgt(i)
    return at == v


def topo_order(q: Quiver) -> VertexPermutation:
    """Relabelling after which every arc (u, v) satisfies u > v.

    Deterministic: repeatedly extract the smallest-label vertex with no
    remaining outgoing arc and assign it the next label counting up from 0.
    Raises CycleError when the quiver has a directed cycle.
    """
    out_deg = [0] * q.n
    in_arcs: list[list[int]] = [[] for _ in range(q.n)]  # by target: list of sources
    for s, t in q.arcs:
        out_deg[s] += 1
        in_arcs[t].append(s)
    ready = [v for v in range(q.n) if out_deg[v] == 0]
    heapq.heapify(ready)
    mapping = [-1] * q.n
    label = 0
    while ready:
        v = heapq.heappop(ready)
        mapping[v] = label
        label += 1
        for s in in_arcs[v]:
            out_deg[s] -= 1
            if out_deg[s] == 0:
                heapq.heappush(ready, s)
    if label != q.n:
        raise CycleError("quiver has a directed cycle")
    return VertexPermutation(tuple(mapping))


def relabel_quiver(q: Quiver, perm: VertexPermutation) -> Quiver:
    """Apply a vertex permutation; arc order (hence arc identity) is unchanged."""
    m = perm.mapping
    return Quiver(q.n, tuple((m[s], m[t]) for s, t in q.arcs))


def is_acyclic(q: Quiver) -> bool:
    try:
        topo_order(q)
        return True
    except CycleError:
        return False


def reachable(q: Quiver, u: int) -> frozenset[int]:
    """Vertices v with a (possibly empty) path u -> v; always contains u."""
    out: dict[int, list[int]] = {}
    for s, t in q.arcs:
        out.setdefault(s, []).append(t)
    seen = {u}
    stack = [u]
    while stack:
        x = stack.pop()
        for t in out.get(x, ()):
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return frozenset(seen)


def all_paths(q: Quiver, u: int, v: int) -> list[Path]:
    """All paths u -> v in an acyclic quiver, in shortlex order on the step
    sequences (length first, then lexicographic)."""
    if not is_acyclic(q):
        raise CycleError("path enumeration requires an acyclic quiver")
    out: dict[int, list[int]] = {}
    for i, (s, _) in enumerate(q.arcs):
        out.setdefault(s, []).append(i)
    found: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def walk(at: int) -> None:
        if at == v:
            found.append(tuple(prefix))
        for i in out.get(at, ()):
            prefix.append(i)
            walk(q.tgt(i))
            prefix.pop()

    walk(u)
    found.sort(key=lambda s: (len(s), s))
    return [Path(u, v, s) for s in found]


def path_quiver(k: int) -> Quiver:
    """The linear quiver with k+1 vertices and arcs i -> i+1."""
    return Quiver(k + 1, tuple((i, i + 1) for i in range(k)))


def to_dot(q: Quiver, highlight: dict[int, str] | None = None) -> str:
    """DOT rendering: one node per vertex labelled by its integer, one edge
    per arc labelled by its index.  `highlight` maps arc index -> color."""
    lines = ["digraph quiver {"]
    for v in range(q.n):
        lines.append(f"  {v};")
    for i, (s, t) in enumerate(q.arcs):
        attrs = [f'label="{i}"']
        if highlight and i in highlight:
            attrs.append(f'color="{highlight[i]}"')
        lines.append(f"  {s} -> {t} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
