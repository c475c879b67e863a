"""Bipaths and the brute-force path-relation closure oracle.

A path relation is, per endpoint pair, an equivalence on the (finite) set of
paths of an acyclic quiver, stable under concatenation on both sides.
`closure` computes the least such relation containing a list of generating
bipaths, by a union-find fixpoint over the full path enumeration.  It is the
reference oracle the decision procedures are tested against: correctness over
speed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError, CycleError, InvalidBipathError, RestrIllFormedError
from .quiver import (
    Path,
    Quiver,
    Subquiver,
    all_paths,
    is_acyclic,
    is_path,
    quiver_restr,
    subquiver_wf,
)

DEFAULT_PATH_CAP = 100_000


@dataclass(frozen=True)
class Bipath:
    """An unordered pair of distinct paths sharing both endpoints."""

    u: int
    v: int
    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(int(s) for s in self.left))
        object.__setattr__(self, "right", tuple(int(s) for s in self.right))

    def canonical(self) -> "Bipath":
        a, b = sorted((self.left, self.right), key=lambda s: (len(s), s))
        return Bipath(self.u, self.v, a, b)

    def reversed(self) -> "Bipath":
        """The same pair read in the dual quiver: endpoints swap, steps reverse."""
        return Bipath(self.v, self.u, tuple(reversed(self.left)), tuple(reversed(self.right)))

    def to_json_dict(self) -> dict:
        return {"u": self.u, "v": self.v, "left": list(self.left), "right": list(self.right)}

    @staticmethod
    def from_json_dict(d: dict) -> "Bipath":
        return Bipath(int(d["u"]), int(d["v"]), tuple(d["left"]), tuple(d["right"]))


def validate_bipath(q: Quiver, b: Bipath) -> None:
    if not is_path(q, b.u, b.left, b.v) or not is_path(q, b.u, b.right, b.v):
        raise InvalidBipathError(f"{b} is not a pair of {b.u}->{b.v} paths")


class PathPartition:
    """Partition of all paths of an acyclic quiver into per-endpoint-pair
    equivalence classes.  Built by `closure`; immutable afterwards."""

    def __init__(self, quiver: Quiver, classes: dict[tuple[int, int], list[list[tuple[int, ...]]]]):
        self.quiver = quiver
        # classes[(u, v)]: list of classes, each a list of step tuples.
        self._classes = classes

    def classes(self, u: int, v: int) -> list[list[tuple[int, ...]]]:
        return self._classes.get((u, v), [])

    def endpoint_pairs(self) -> list[tuple[int, int]]:
        return sorted(self._classes)

    def same_class(self, u: int, v: int, p: tuple[int, ...], q: tuple[int, ...]) -> bool:
        for cls in self.classes(u, v):
            if p in cls:
                return q in cls
        return False

    def is_full(self) -> bool:
        return all(len(cls) <= 1 for cls in self._classes.values())

    def refines(self, other: "PathPartition") -> bool:
        """True when every class of self is contained in a class of other."""
        for (u, v), classes in self._classes.items():
            for cls in classes:
                rep = cls[0]
                target = next((c for c in other.classes(u, v) if rep in c), None)
                if target is None or not all(p in target for p in cls):
                    return False
        return True

    def to_debug_dict(self) -> dict:
        return {
            f"{u}->{v}": [[list(p) for p in cls] for cls in classes]
            for (u, v), classes in sorted(self._classes.items())
        }


def is_full(q: Quiver, partition: PathPartition) -> bool:
    return partition.is_full()


def _all_path_table(q: Quiver, cap: int) -> dict[tuple[int, int], list[tuple[int, ...]]]:
    table: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    total = 0
    for u in range(q.n):
        for v in range(q.n):
            steps = [p.steps for p in all_paths(q, u, v)]
            total += len(steps)
            if total > cap:
                raise CapExceededError("total path count", cap)
            table[(u, v)] = steps
    return table


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        # keep the least id as representative for stable output
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def closure(q: Quiver, generators: list[Bipath], cap: int = DEFAULT_PATH_CAP) -> PathPartition:
    """Least concatenation-stable equivalence on same-endpoint paths
    containing the given bipaths.

    Paths are indexed densely per endpoint pair (rank in `all_paths` order) so
    merging runs over a contiguous union-find.  The fixpoint re-propagates
    one-sided concatenations until no merge occurs; with transitivity this
    yields two-sided stability.
    """
    if not is_acyclic(q):
        raise CycleError("closure requires an acyclic quiver")
    table = _all_path_table(q, cap)
    ids: dict[tuple[int, int], dict[tuple[int, ...], int]] = {}
    offset = 0
    offsets: dict[tuple[int, int], int] = {}
    for pair in sorted(table):
        offsets[pair] = offset
        ids[pair] = {steps: offset + r for r, steps in enumerate(table[pair])}
        offset += len(table[pair])
    uf = _UnionFind(offset)

    for b in generators:
        validate_bipath(q, b)
        pair_ids = ids[(b.u, b.v)]
        uf.union(pair_ids[b.left], pair_ids[b.right])

    changed = True
    while changed:
        changed = False
        for (u, v), paths in table.items():
            # group current classes for this pair
            groups: dict[int, list[tuple[int, ...]]] = {}
            for steps in paths:
                groups.setdefault(uf.find(ids[(u, v)][steps]), []).append(steps)
            for members in groups.values():
                if len(members) < 2:
                    continue
                rep = members[0]
                for p in members[1:]:
                    # extend on the right: rep ++ s ~ p ++ s for every path s from v
                    for w in range(q.n):
                        for s in table.get((v, w), ()):
                            a = ids[(u, w)][rep + s]
                            bb = ids[(u, w)][p + s]
                            if uf.union(a, bb):
                                changed = True
                    # extend on the left: r ++ rep ~ r ++ p for every path r into u
                    for w in range(q.n):
                        for r in table.get((w, u), ()):
                            a = ids[(w, v)][r + rep]
                            bb = ids[(w, v)][r + p]
                            if uf.union(a, bb):
                                changed = True

    classes: dict[tuple[int, int], list[list[tuple[int, ...]]]] = {}
    for pair, paths in table.items():
        by_root: dict[int, list[tuple[int, ...]]] = {}
        for steps in paths:
            by_root.setdefault(uf.find(ids[pair][steps]), []).append(steps)
        classes[pair] = [by_root[r] for r in sorted(by_root)]
    return PathPartition(q, classes)


def enumerate_bipaths(q: Quiver, cap: int = DEFAULT_PATH_CAP) -> list[Bipath]:
    """Every unordered pair of distinct same-extremity paths, once each.

    Pairs are emitted grouped by (u, v) and ordered by the shortlex ranks of
    their two sides.
    """
    if not is_acyclic(q):
        raise CycleError("bipath enumeration requires an acyclic quiver")
    table = _all_path_table(q, cap)
    out: list[Bipath] = []
    for (u, v) in sorted(table):
        paths = table[(u, v)]
        for i in range(len(paths)):
            for j in range(i + 1, len(paths)):
                out.append(Bipath(u, v, paths[i], paths[j]))
    return out


def subquiver_bipaths(q: Quiver, sq: Subquiver, cap: int = DEFAULT_PATH_CAP) -> list[Bipath]:
    """Bipaths of the restricted quiver, re-expressed in host coordinates."""
    if not subquiver_wf(sq, q):
        raise RestrIllFormedError(f"{sq} invalid for host quiver")
    restricted = quiver_restr(sq, q)
    out = []
    for b in enumerate_bipaths(restricted, cap):
        out.append(
            Bipath(
                sq.vertices[b.u],
                sq.vertices[b.v],
                tuple(sq.arc_indices[i] for i in b.left),
                tuple(sq.arc_indices[i] for i in b.right),
            )
        )
    return out
