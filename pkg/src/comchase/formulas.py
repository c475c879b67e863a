"""The deep-embedded first-order language of diagram statements.

Terms are either variables (de Bruijn indices, innermost binder = index 0) or
restrictions of a term by a subquiver.  Formulas combine quantifiers annotated
with an acyclic quiver (the sort of the bound diagram variable), implication,
conjunction, truth, and the two atoms: commutativity of a diagram term and
diagram equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RestrIllFormedError, SortError
from .quiver import (
    Quiver,
    Subquiver,
    is_acyclic,
    quiver_dual,
    quiver_restr,
    quiver_wf,
    subquiver_compose,
    subquiver_spanning_arcs,
)

Context = tuple[Quiver, ...]  # sort of each variable, index 0 = innermost binder


# ---------------------------------------------------------------------------
# terms


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Restr:
    sq: Subquiver
    term: "Term"


Term = Var | Restr


# ---------------------------------------------------------------------------
# formulas


@dataclass(frozen=True)
class Forall:
    quiver: Quiver
    body: "Formula"


@dataclass(frozen=True)
class Exists:
    quiver: Quiver
    body: "Formula"


@dataclass(frozen=True)
class Imply:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class And:
    lhs: "Formula"
    rhs: "Formula"


@dataclass(frozen=True)
class FTrue:
    pass


@dataclass(frozen=True)
class Commute:
    term: Term


@dataclass(frozen=True)
class EqD:
    lhs: Term
    rhs: Term


Formula = Forall | Exists | Imply | And | FTrue | Commute | EqD

FTRUE = FTrue()


@dataclass(frozen=True)
class Predicate:
    """A formula abstracted over parameters; `arity[i]` is the sort of the
    free variable i of the body."""

    arity: tuple[Quiver, ...]
    body: Formula


# ---------------------------------------------------------------------------
# sorts and well-formedness


def term_sort(ctx: Context, t: Term) -> Quiver:
    """Sort of a term: variables read the context, restrictions restrict.

    Raises SortError (unbound variable / invalid restriction).
    """
    if isinstance(t, Var):
        if 0 <= t.index < len(ctx):
            return ctx[t.index]
        raise SortError("unbound_var", f"${t.index} in context of length {len(ctx)}")
    inner = term_sort(ctx, t.term)
    try:
        return quiver_restr(t.sq, inner)
    except RestrIllFormedError as e:
        raise SortError("bad_restr", str(e)) from e


def term_wf(ctx: Context, t: Term) -> bool:
    try:
        term_sort(ctx, t)
        return True
    except SortError:
        return False


def formula_wf(ctx: Context, f: Formula) -> bool:
    """Every term's sort must resolve, quantifier quivers must be well-formed
    and acyclic, and both sides of an equality must have equal sorts."""
    if isinstance(f, (Forall, Exists)):
        if not quiver_wf(f.quiver) or not is_acyclic(f.quiver):
            return False
        return formula_wf((f.quiver,) + ctx, f.body)
    if isinstance(f, (Imply, And)):
        return formula_wf(ctx, f.lhs) and formula_wf(ctx, f.rhs)
    if isinstance(f, FTrue):
        return True
    if isinstance(f, Commute):
        return term_wf(ctx, f.term)
    if isinstance(f, EqD):
        try:
            return term_sort(ctx, f.lhs) == term_sort(ctx, f.rhs)
        except SortError:
            return False
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# duality

def formula_dual(f: Formula) -> Formula:
    """Dualize every quantifier quiver; terms carry over unchanged (a
    subquiver selection is insensitive to arrow direction)."""
    if isinstance(f, Forall):
        return Forall(quiver_dual(f.quiver), formula_dual(f.body))
    if isinstance(f, Exists):
        return Exists(quiver_dual(f.quiver), formula_dual(f.body))
    if isinstance(f, Imply):
        return Imply(formula_dual(f.lhs), formula_dual(f.rhs))
    if isinstance(f, And):
        return And(formula_dual(f.lhs), formula_dual(f.rhs))
    return f


def dual_context(ctx: Context) -> Context:
    return tuple(quiver_dual(q) for q in ctx)


# ---------------------------------------------------------------------------
# shifting and substitution

def shift_term(t: Term, by: int, cutoff: int = 0) -> Term:
    if isinstance(t, Var):
        return Var(t.index + by) if t.index >= cutoff else t
    return Restr(t.sq, shift_term(t.term, by, cutoff))


def shift_formula(f: Formula, by: int, cutoff: int = 0) -> Formula:
    if isinstance(f, Forall):
        return Forall(f.quiver, shift_formula(f.body, by, cutoff + 1))
    if isinstance(f, Exists):
        return Exists(f.quiver, shift_formula(f.body, by, cutoff + 1))
    if isinstance(f, Imply):
        return Imply(shift_formula(f.lhs, by, cutoff), shift_formula(f.rhs, by, cutoff))
    if isinstance(f, And):
        return And(shift_formula(f.lhs, by, cutoff), shift_formula(f.rhs, by, cutoff))
    if isinstance(f, FTrue):
        return f
    if isinstance(f, Commute):
        return Commute(shift_term(f.term, by, cutoff))
    return EqD(shift_term(f.lhs, by, cutoff), shift_term(f.rhs, by, cutoff))


def subst_term(t: Term, args: tuple[Term, ...], depth: int = 0) -> Term:
    """Simultaneously replace the free variables depth..depth+len(args)-1 by
    `args` (shifted under binders); variables above shift down."""
    if isinstance(t, Restr):
        return Restr(t.sq, subst_term(t.term, args, depth))
    k = t.index
    if k < depth:
        return t
    if k - depth < len(args):
        return shift_term(args[k - depth], depth)
    return Var(k - len(args))


def subst_formula(f: Formula, args: tuple[Term, ...], depth: int = 0) -> Formula:
    if isinstance(f, Forall):
        return Forall(f.quiver, subst_formula(f.body, args, depth + 1))
    if isinstance(f, Exists):
        return Exists(f.quiver, subst_formula(f.body, args, depth + 1))
    if isinstance(f, Imply):
        return Imply(subst_formula(f.lhs, args, depth), subst_formula(f.rhs, args, depth))
    if isinstance(f, And):
        return And(subst_formula(f.lhs, args, depth), subst_formula(f.rhs, args, depth))
    if isinstance(f, FTrue):
        return f
    if isinstance(f, Commute):
        return Commute(subst_term(f.term, args, depth))
    return EqD(subst_term(f.lhs, args, depth), subst_term(f.rhs, args, depth))


def instantiate(body: Formula, t: Term) -> Formula:
    """Open one binder: substitute `t` for variable 0 of a quantifier body."""
    return subst_formula(body, (t,))


def apply_predicate(pred: Predicate, args: list[Term], ctx: Context) -> Formula:
    """Substitute the parameters of a predicate by argument terms.

    Each argument must have, in the caller's context, exactly the sort the
    arity prescribes.
    """
    if len(args) != len(pred.arity):
        raise SortError("arity_mismatch", f"{len(args)} args for arity {len(pred.arity)}")
    for i, (arg, want) in enumerate(zip(args, pred.arity)):
        got = term_sort(ctx, arg)
        if got != want:
            raise SortError("arg_sort", f"argument {i} has sort {got}, expected {want}")
    return subst_formula(pred.body, tuple(args))


# ---------------------------------------------------------------------------
# term flattening

def flatten_term(ctx: Context, t: Term) -> tuple[int, Subquiver]:
    """Collapse a restriction chain to (root variable index, one subquiver of
    the root's sort).  A bare variable yields its identity selection."""
    if isinstance(t, Var):
        sort = term_sort(ctx, t)
        return t.index, Subquiver(tuple(range(sort.n)), tuple(range(len(sort.arcs))))
    root, inner = flatten_term(ctx, t.term)
    host = ctx[root]
    return root, subquiver_compose(host, t.sq, inner)


def canonical_term(ctx: Context, t: Term) -> Term:
    root, sq = flatten_term(ctx, t)
    sort = ctx[root]
    if sq.vertices == tuple(range(sort.n)) and sq.arc_indices == tuple(range(len(sort.arcs))):
        return Var(root)
    return Restr(sq, Var(root))


def canonical_formula(ctx: Context, f: Formula) -> Formula:
    """Normalize every term to a single restriction of its root variable.
    Defined only on well-formed formulas; evaluation is preserved."""
    if isinstance(f, Forall):
        return Forall(f.quiver, canonical_formula((f.quiver,) + ctx, f.body))
    if isinstance(f, Exists):
        return Exists(f.quiver, canonical_formula((f.quiver,) + ctx, f.body))
    if isinstance(f, Imply):
        return Imply(canonical_formula(ctx, f.lhs), canonical_formula(ctx, f.rhs))
    if isinstance(f, And):
        return And(canonical_formula(ctx, f.lhs), canonical_formula(ctx, f.rhs))
    if isinstance(f, FTrue):
        return f
    if isinstance(f, Commute):
        return Commute(canonical_term(ctx, f.term))
    return EqD(canonical_term(ctx, f.lhs), canonical_term(ctx, f.rhs))


# ---------------------------------------------------------------------------
# vertex filling

def fill_vertices(arcs: list[tuple[int, int]]) -> Quiver:
    """Quiver described by its arcs alone: the vertex count is one past the
    largest label mentioned (zero for no arcs)."""
    n = 1 + max((max(s, t) for s, t in arcs), default=-1)
    return Quiver(n, tuple(arcs))


def formula_fill_vertices(f: Formula) -> Formula:
    """Recompute every quantifier quiver's vertex count from its arcs."""
    if isinstance(f, Forall):
        return Forall(fill_vertices(list(f.quiver.arcs)), formula_fill_vertices(f.body))
    if isinstance(f, Exists):
        return Exists(fill_vertices(list(f.quiver.arcs)), formula_fill_vertices(f.body))
    if isinstance(f, Imply):
        return Imply(formula_fill_vertices(f.lhs), formula_fill_vertices(f.rhs))
    if isinstance(f, And):
        return And(formula_fill_vertices(f.lhs), formula_fill_vertices(f.rhs))
    return f


# ---------------------------------------------------------------------------
# standard corpus

mapQ = Quiver(2, ((0, 1),))
monoQ = Quiver(3, ((0, 1), (0, 1), (0, 2), (1, 2)))
compQ = Quiver(3, ((0, 1), (0, 2), (1, 2)))
mapQD = quiver_dual(mapQ)
monoQD = quiver_dual(monoQ)
compQD = quiver_dual(compQ)


def _restr_arcs(host: Quiver, arc_indices: tuple[int, ...], t: Term) -> Term:
    return Restr(subquiver_spanning_arcs(host, arc_indices), t)


def _mono_like(host: Quiver) -> Predicate:
    # Over the two-parallel-plus-diagonal shape: if the single (1,2) edge of a
    # bound diagram equals the parameter and both of its triangles commute,
    # the parallel pair commutes.
    body = Forall(
        host,
        Imply(
            EqD(_restr_arcs(host, (3,), Var(0)), Var(1)),
            Imply(
                Commute(_restr_arcs(host, (0, 2, 3), Var(0))),
                Imply(
                    Commute(_restr_arcs(host, (1, 2, 3), Var(0))),
                    Commute(_restr_arcs(host, (0, 1), Var(0))),
                ),
            ),
        ),
    )
    param_sort = quiver_restr(subquiver_spanning_arcs(host, (3,)), host)
    return Predicate((param_sort,), body)


monoF = _mono_like(monoQ)
epiF = _mono_like(monoQD)

# Composite-of-arrows predicate: there is a triangle diagram whose legs equal
# the three parameters and which commutes.
compF = Predicate(
    (mapQ, mapQ, mapQ),
    Exists(
        compQ,
        And(
            EqD(_restr_arcs(compQ, (0,), Var(0)), Var(1)),
            And(
                EqD(_restr_arcs(compQ, (2,), Var(0)), Var(2)),
                And(
                    EqD(_restr_arcs(compQ, (1,), Var(0)), Var(3)),
                    Commute(Var(0)),
                ),
            ),
        ),
    ),
)


def _mono_monom_like(triangle: Quiver, pred: Predicate) -> Formula:
    # commuting triangle: if its long edge satisfies `pred`, so does its first leg
    return formula_fill_vertices(
        Forall(
            triangle,
            Imply(
                Commute(Var(0)),
                Imply(
                    apply_predicate(pred, [_restr_arcs(triangle, (1,), Var(0))], (triangle,)),
                    apply_predicate(pred, [_restr_arcs(triangle, (0,), Var(0))], (triangle,)),
                ),
            ),
        )
    )


mono_monomPF = _mono_monom_like(compQ, monoF)
epi_mepiPF = _mono_monom_like(compQD, epiF)


def corpus() -> dict[str, object]:
    """The named fixture quivers, predicates and formulas."""
    return {
        "mapQ": mapQ,
        "monoQ": monoQ,
        "compQ": compQ,
        "mapQD": mapQD,
        "monoQD": monoQD,
        "compQD": compQD,
        "monoF": monoF,
        "epiF": epiF,
        "compF": compF,
        "mono_monomPF": mono_monomPF,
        "epi_mepiPF": epi_mepiPF,
    }


def corpus_formulas() -> dict[str, Formula]:
    return {"mono_monomPF": mono_monomPF, "epi_mepiPF": epi_mepiPF}
