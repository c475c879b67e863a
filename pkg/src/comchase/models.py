"""Executable diagram models: finite categories decorating quivers.

A model provides the semantics of the formula language: quantifiers range
over all decorations of their quiver by a finite category, the commutativity
atom asks that all same-endpoint path composites coincide, and diagram
equality is pointwise.  Enumerability of decorations is what makes the
semantics testable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import CapExceededError, CycleError
from .formulas import (
    And,
    Commute,
    Context,
    EqD,
    Exists,
    Forall,
    Formula,
    FTrue,
    Imply,
    Restr,
    Term,
    Var,
)
from .quiver import (
    Path,
    Quiver,
    Subquiver,
    all_paths,
    is_acyclic,
    quiver_dual,
    quiver_restr,
    subquiver_wf,
)

DEFAULT_ENUM_CAP = 200_000


@dataclass(frozen=True)
class FinCat:
    """A finite category given by tables.

    `compose[g][f]` is the index of g-after-f when tgt(f) == src(g), else
    None.  Well-formedness (`fincat_wf`) checks the category laws
    exhaustively.
    """

    name: str
    object_count: int
    mor_src: tuple[int, ...]
    mor_tgt: tuple[int, ...]
    identity: tuple[int, ...]
    compose: tuple[tuple[int | None, ...], ...]

    @property
    def mor_count(self) -> int:
        return len(self.mor_src)

    def hom(self, a: int, b: int) -> list[int]:
        return [m for m in range(self.mor_count)
                if self.mor_src[m] == a and self.mor_tgt[m] == b]

    def comp(self, g: int, f: int) -> int | None:
        return self.compose[g][f]

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "objects": self.object_count,
            "mor_src": list(self.mor_src),
            "mor_tgt": list(self.mor_tgt),
            "identity": list(self.identity),
            "compose": [list(row) for row in self.compose],
        }

    @staticmethod
    def from_json_dict(d: dict) -> "FinCat":
        return FinCat(
            d.get("name", "unnamed"),
            int(d["objects"]),
            tuple(d["mor_src"]),
            tuple(d["mor_tgt"]),
            tuple(d["identity"]),
            tuple(tuple(x if x is None else int(x) for x in row) for row in d["compose"]),
        )


def fincat_wf(c: FinCat) -> bool:
    """Exhaustive check of shape consistency, unit laws, composability
    closure and associativity."""
    n, m = c.object_count, c.mor_count
    if len(c.mor_tgt) != m or len(c.identity) != n or len(c.compose) != m:
        return False
    if any(len(row) != m for row in c.compose):
        return False
    if not all(0 <= c.mor_src[i] < n and 0 <= c.mor_tgt[i] < n for i in range(m)):
        return False
    for a in range(n):
        i = c.identity[a]
        if not (0 <= i < m and c.mor_src[i] == a and c.mor_tgt[i] == a):
            return False
    for g in range(m):
        for f in range(m):
            comp = c.compose[g][f]
            composable = c.mor_tgt[f] == c.mor_src[g]
            if composable:
                if comp is None:
                    return False
                if c.mor_src[comp] != c.mor_src[f] or c.mor_tgt[comp] != c.mor_tgt[g]:
                    return False
            elif comp is not None:
                return False
    for f in range(m):
        if c.compose[f][c.identity[c.mor_src[f]]] != f:
            return False
        if c.compose[c.identity[c.mor_tgt[f]]][f] != f:
            return False
    for h in range(m):
        for g in range(m):
            if c.mor_tgt[g] != c.mor_src[h]:
                continue
            hg = c.compose[h][g]
            for f in range(m):
                if c.mor_tgt[f] != c.mor_src[g]:
                    continue
                if c.compose[hg][f] != c.compose[h][c.compose[g][f]]:
                    return False
    return True


def is_monic(c: FinCat, m: int) -> bool:
    """Direct table search for the monomorphism property."""
    a = c.mor_src[m]
    for x in range(c.object_count):
        for h in c.hom(x, a):
            for k in c.hom(x, a):
                if c.compose[m][h] == c.compose[m][k] and h != k:
                    return False
    return True


@dataclass(frozen=True)
class FinCatDiagram:
    """A decoration of a quiver by a finite category: one object per vertex,
    one morphism per arc, endpoints matching."""

    shape: Quiver
    vertex_obj: tuple[int, ...]
    arc_mor: tuple[int, ...]


def diagram_wf(c: FinCat, d: FinCatDiagram) -> bool:
    if len(d.vertex_obj) != d.shape.n or len(d.arc_mor) != len(d.shape.arcs):
        return False
    return all(
        c.mor_src[d.arc_mor[i]] == d.vertex_obj[s] and c.mor_tgt[d.arc_mor[i]] == d.vertex_obj[t]
        for i, (s, t) in enumerate(d.shape.arcs)
    )


def path_composite(c: FinCat, d: FinCatDiagram, p: Path) -> int:
    """Composite of the decorations along a path; the empty path yields the
    identity at the path's vertex."""
    acc = c.identity[d.vertex_obj[p.u]]
    for i in p.steps:
        acc = c.compose[d.arc_mor[i]][acc]
        assert acc is not None
    return acc


class DiagramModel:
    """Contract shared by all diagram models.

    `path_related` must be, per endpoint pair, an equivalence stable under
    concatenation; `eq_diagram` an equivalence compatible with restriction and
    commutativity.  `commutes` is derived: the path relation is full on the
    diagram's quiver.
    """

    def to_quiver(self, d) -> Quiver:
        raise NotImplementedError

    def restrict(self, sq: Subquiver, d):
        raise NotImplementedError

    def eq_diagram(self, d1, d2) -> bool:
        raise NotImplementedError

    def path_related(self, d, u: int, v: int, p: tuple[int, ...], q: tuple[int, ...]) -> bool:
        raise NotImplementedError

    def enumerate(self, q: Quiver, cap: int = DEFAULT_ENUM_CAP) -> list:
        raise NotImplementedError

    def commutes(self, d) -> bool:
        shape = self.to_quiver(d)
        if not is_acyclic(shape):
            raise CycleError("commutativity requires an acyclic shape")
        for u in range(shape.n):
            for v in range(shape.n):
                paths = all_paths(shape, u, v)
                for i in range(len(paths)):
                    for j in range(i + 1, len(paths)):
                        if not self.path_related(d, u, v, paths[i].steps, paths[j].steps):
                            return False
        return True


class FinCatModel(DiagramModel):
    def __init__(self, cat: FinCat):
        self.cat = cat

    def to_quiver(self, d: FinCatDiagram) -> Quiver:
        return d.shape

    def restrict(self, sq: Subquiver, d: FinCatDiagram) -> FinCatDiagram:
        return FinCatDiagram(
            quiver_restr(sq, d.shape),
            tuple(d.vertex_obj[v] for v in sq.vertices),
            tuple(d.arc_mor[i] for i in sq.arc_indices),
        )

    def eq_diagram(self, d1: FinCatDiagram, d2: FinCatDiagram) -> bool:
        return d1 == d2

    def path_related(self, d, u, v, p, q) -> bool:
        c = self.cat
        return path_composite(c, d, Path(u, v, p)) == path_composite(c, d, Path(u, v, q))

    def enumerate(self, q: Quiver, cap: int = DEFAULT_ENUM_CAP) -> list[FinCatDiagram]:
        """All decorations, vertex objects varying outermost, in table order."""
        c = self.cat
        out: list[FinCatDiagram] = []
        for objs in itertools.product(range(c.object_count), repeat=q.n):
            choices = [c.hom(objs[s], objs[t]) for s, t in q.arcs]
            if any(not ch for ch in choices):
                continue
            for mors in itertools.product(*choices):
                out.append(FinCatDiagram(q, objs, mors))
                if len(out) > cap:
                    raise CapExceededError("diagram enumeration", cap)
        return out


class DualModel(DiagramModel):
    """Same carrier and data, quiver dualized and path relation reversed."""

    def __init__(self, inner: DiagramModel):
        self.inner = inner

    def to_quiver(self, d) -> Quiver:
        return quiver_dual(self.inner.to_quiver(d))

    def restrict(self, sq: Subquiver, d):
        return self.inner.restrict(sq, d)

    def eq_diagram(self, d1, d2) -> bool:
        return self.inner.eq_diagram(d1, d2)

    def path_related(self, d, u, v, p, q) -> bool:
        return self.inner.path_related(d, v, u, tuple(reversed(p)), tuple(reversed(q)))

    def enumerate(self, q: Quiver, cap: int = DEFAULT_ENUM_CAP) -> list:
        return self.inner.enumerate(quiver_dual(q), cap)


def model_dual(m: DiagramModel) -> DiagramModel:
    return DualModel(m)


def enumerate_diagrams(c: FinCat, q: Quiver, cap: int = DEFAULT_ENUM_CAP) -> list[FinCatDiagram]:
    return FinCatModel(c).enumerate(q, cap)


def fincat_commute(c: FinCat, d: FinCatDiagram) -> bool:
    return FinCatModel(c).commutes(d)


# ---------------------------------------------------------------------------
# evaluation

def term_oeval(model: DiagramModel, stack: list, t: Term):
    """Evaluate a term to a diagram; None when a variable is out of range or
    a restriction does not apply to the diagram's quiver."""
    if isinstance(t, Var):
        if 0 <= t.index < len(stack):
            return stack[t.index]
        return None
    inner = term_oeval(model, stack, t.term)
    if inner is None:
        return None
    if not subquiver_wf(t.sq, model.to_quiver(inner)):
        return None
    return model.restrict(t.sq, inner)


def formula_eval(model: DiagramModel, stack: list, f: Formula,
                 cap: int = DEFAULT_ENUM_CAP) -> bool:
    """Truth of a formula over a model; atom evaluation failures are false."""
    if isinstance(f, Forall):
        return all(
            formula_eval(model, [d] + stack, f.body, cap)
            for d in model.enumerate(f.quiver, cap)
        )
    if isinstance(f, Exists):
        return any(
            formula_eval(model, [d] + stack, f.body, cap)
            for d in model.enumerate(f.quiver, cap)
        )
    if isinstance(f, Imply):
        return (not formula_eval(model, stack, f.lhs, cap)) or formula_eval(model, stack, f.rhs, cap)
    if isinstance(f, And):
        return formula_eval(model, stack, f.lhs, cap) and formula_eval(model, stack, f.rhs, cap)
    if isinstance(f, FTrue):
        return True
    if isinstance(f, Commute):
        d = term_oeval(model, stack, f.term)
        return model.commutes(d) if d is not None else False
    if isinstance(f, EqD):
        d1 = term_oeval(model, stack, f.lhs)
        d2 = term_oeval(model, stack, f.rhs)
        if d1 is None or d2 is None:
            return False
        return model.eq_diagram(d1, d2)
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# the test battery

def _discrete_like(name: str, object_count: int) -> FinCat:
    src = tuple(range(object_count))
    comp = tuple(
        tuple(g if g == f else None for f in range(object_count))
        for g in range(object_count)
    )
    return FinCat(name, object_count, src, src, src, comp)


def _trivial() -> FinCat:
    return _discrete_like("trivial", 1)


def _poset_chain3() -> FinCat:
    # objects 0 <= 1 <= 2; one morphism per comparable pair
    pairs = [(a, b) for a in range(3) for b in range(3) if a <= b]
    idx = {p: i for i, p in enumerate(pairs)}
    src = tuple(a for a, _ in pairs)
    tgt = tuple(b for _, b in pairs)
    ident = tuple(idx[(a, a)] for a in range(3))
    comp = tuple(
        tuple(
            idx[(src[f], tgt[g])] if tgt[f] == src[g] else None
            for f in range(len(pairs))
        )
        for g in range(len(pairs))
    )
    return FinCat("poset_chain3", 3, src, tgt, ident, comp)


def _parallel_pair() -> FinCat:
    # two objects, two distinct parallel morphisms between them
    # morphisms: 0=id0, 1=id1, 2=u, 3=v
    src = (0, 1, 0, 0)
    tgt = (0, 1, 1, 1)
    ident = (0, 1)
    table: list[list[int | None]] = [[None] * 4 for _ in range(4)]
    for f in range(4):
        table[f][ident[src[f]]] = f
        table[ident[tgt[f]]][f] = f
    return FinCat("parallel_pair", 2, src, tgt, ident, tuple(tuple(r) for r in table))


def _idempotent_monoid() -> FinCat:
    # one object, morphisms id and e with e.e = e; e is not monic
    src = (0, 0)
    tgt = (0, 0)
    ident = (0,)
    comp = ((0, 1), (1, 1))
    return FinCat("idempotent_monoid", 1, src, tgt, ident, comp)


def _fork_collapse() -> FinCat:
    # objects 0,1,2; h,k : 0 -> 1 distinct, c : 1 -> 2 with c.h = c.k = d,
    # making c genuinely non-monic.
    # morphisms: 0=id0, 1=id1, 2=id2, 3=h, 4=k, 5=c, 6=d
    src = (0, 1, 2, 0, 0, 1, 0)
    tgt = (0, 1, 2, 1, 1, 2, 2)
    ident = (0, 1, 2)
    table: list[list[int | None]] = [[None] * 7 for _ in range(7)]
    for f in range(7):
        table[f][ident[src[f]]] = f
        table[ident[tgt[f]]][f] = f
    table[5][3] = 6  # c after h
    table[5][4] = 6  # c after k
    return FinCat("fork_collapse", 3, src, tgt, ident, tuple(tuple(r) for r in table))


def battery() -> list[FinCat]:
    """Categories spanning mono/epi behaviour cheaply; all gate on fincat_wf."""
    return [_trivial(), _poset_chain3(), _parallel_pair(), _idempotent_monoid(), _fork_collapse()]


def battery_models() -> list[FinCatModel]:
    return [FinCatModel(c) for c in battery()]
