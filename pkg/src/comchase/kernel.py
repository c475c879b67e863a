"""Reified proof states and the dualizable tactic set.

A sequent carries a context of quivers (sorts of the bound diagram
variables, innermost first), premise formulas, and a single goal.  A tactic
is a partial sequent transformer; a proof is a list of tactics; a proof
checks when every tactic applies in turn and the final goal is the trivial
truth.  Every tactic has a dual, and pairing a proof with its pointwise dual
(a biproof) transports a proof of a formula to a proof of its dual.

Every formula entering a sequent is normalized so that each term is a single
restriction of a variable (nested selections are composed away); tactic
guards then compare formulas structurally.
"""

from __future__ import annotations

from dataclasses import dataclass

from .commerge import BipathAssm, SubquiverAssm, commerge
from .errors import BiproofIllFormedError, CapExceededError, SortError
from .formulas import (
    And,
    Commute,
    EqD,
    Exists,
    Forall,
    Formula,
    FTRUE,
    FTrue,
    Imply,
    Restr,
    Term,
    Var,
    canonical_formula,
    flatten_term,
    formula_dual,
    formula_wf,
    instantiate,
    shift_formula,
    shift_term,
    term_sort,
)
from .pathrel import Bipath, closure, subquiver_bipaths
from .quiver import (
    Quiver,
    Subquiver,
    all_paths,
    is_acyclic,
    quiver_restr,
    quiver_dual,
)

# ---------------------------------------------------------------------------
# sequents


@dataclass(frozen=True)
class Sequent:
    context: tuple[Quiver, ...]  # sorts of the bound variables, index 0 innermost
    premises: tuple[Formula, ...]
    goal: Formula


def sequent_of_formula(f: Formula) -> Sequent:
    return Sequent((), (), canonical_formula((), f))


def formula_of_sequent(s: Sequent) -> Formula:
    """The closed formula a sequent stands for: universally close the context
    over an implication from the premise conjunction into the goal."""
    chain: Formula = FTRUE
    for h in reversed(s.premises):
        chain = And(h, chain)
    f: Formula = Imply(chain, s.goal)
    for q in s.context:  # innermost binder first
        f = Forall(q, f)
    return f


def sequent_wf(s: Sequent) -> bool:
    return formula_wf((), formula_of_sequent(s))


def dual_sequent(s: Sequent) -> Sequent:
    return Sequent(
        tuple(quiver_dual(q) for q in s.context),
        tuple(formula_dual(p) for p in s.premises),
        formula_dual(s.goal),
    )


# ---------------------------------------------------------------------------
# tactics


@dataclass(frozen=True)
class Intro:
    pass


@dataclass(frozen=True)
class IntroImply:
    pass


@dataclass(frozen=True)
class Assumption:
    premise: int


@dataclass(frozen=True)
class Witness:
    term: Term


@dataclass(frozen=True)
class AndIntro:
    left_proof: tuple["Tactic", ...]


@dataclass(frozen=True)
class SpecializePremise:
    premise: int
    term: Term


@dataclass(frozen=True)
class DetachPremise:
    premise: int
    using: int


@dataclass(frozen=True)
class RewriteEqD:
    premise: int
    direction: str  # "->" rewrites left side to right, "<-" the reverse
    occurrence: int = 1  # 1-based, preorder over goal atoms


@dataclass(frozen=True)
class Comauto:
    pass


@dataclass(frozen=True)
class ApplyLemma:
    name: str


@dataclass(frozen=True)
class ApplyDualLemma:
    name: str


@dataclass(frozen=True)
class TrueIntro:
    pass


@dataclass(frozen=True)
class Have:
    formula: Formula
    proof: tuple["Tactic", ...]


@dataclass(frozen=True)
class EqDRefl:
    pass


@dataclass(frozen=True)
class Paste:
    premise: int


@dataclass(frozen=True)
class Saturate:
    var: int


Tactic = (
    Intro | IntroImply | Assumption | Witness | AndIntro | SpecializePremise
    | DetachPremise | RewriteEqD | Comauto | ApplyLemma | ApplyDualLemma
    | TrueIntro | Have | EqDRefl | Paste | Saturate
)

Proof = tuple[Tactic, ...]


# ---------------------------------------------------------------------------
# lemma registry


@dataclass
class LemmaEntry:
    formula: Formula
    proof: Proof
    dual_proof: Proof | None = None


class LemmaRegistry:
    """Named, checked lemmas usable by ApplyLemma / ApplyDualLemma.
    Registration requires a passing proof."""

    def __init__(self):
        self._entries: dict[str, LemmaEntry] = {}

    def register(self, name: str, formula: Formula, proof: Proof,
                 dual_proof: Proof | None = None) -> None:
        if not check_proof(formula, proof, self):
            raise ValueError(f"proof of {name!r} does not check")
        if dual_proof is not None and not check_proof(formula_dual(formula), dual_proof, self):
            raise ValueError(f"dual proof of {name!r} does not check")
        self._entries[name] = LemmaEntry(canonical_formula((), formula), proof, dual_proof)

    def get(self, name: str) -> LemmaEntry | None:
        return self._entries.get(name)

    def names(self) -> list[str]:
        return sorted(self._entries)

    def __contains__(self, name: str) -> bool:
        return name in self._entries


# ---------------------------------------------------------------------------
# rewriting machinery
#
# Rewriting with an equality premise EqD(src, dst) also fires on goal terms
# that are sub-restrictions of `src` (the diagram-equality contract is
# compatible with restriction), replacing them with the matching
# sub-restriction of `dst`.


class _RewriteState:
    def __init__(self, target: int):
        self.target = target
        self.count = 0
        self.done = False


def _selection_within(sq_small: Subquiver, sq_big: Subquiver) -> Subquiver | None:
    """Positions of one selection inside another, when every chosen vertex
    and arc of the small one appears in the big one."""
    try:
        verts = tuple(sq_big.vertices.index(v) for v in sq_small.vertices)
        arcs = tuple(sq_big.arc_indices.index(a) for a in sq_small.arc_indices)
    except ValueError:
        return None
    return Subquiver(verts, arcs)


def _term_selection(ctx, t: Term) -> tuple[int, Subquiver] | None:
    try:
        return flatten_term(ctx, t)
    except SortError:
        return None


def _match_restriction(ctx, candidate: Term, src: Term, dst: Term) -> Term | None:
    """If `candidate` denotes a sub-restriction of `src`, the corresponding
    sub-restriction of `dst` (src and dst have equal sorts)."""
    fc = _term_selection(ctx, candidate)
    fs = _term_selection(ctx, src)
    fd = _term_selection(ctx, dst)
    if fc is None or fs is None or fd is None:
        return None
    (rc, sqc), (rs, sqs), (rd, sqd) = fc, fs, fd
    if rc != rs:
        return None
    inside = _selection_within(sqc, sqs)
    if inside is None:
        return None
    replaced = Subquiver(
        tuple(sqd.vertices[x] for x in inside.vertices),
        tuple(sqd.arc_indices[j] for j in inside.arc_indices),
    )
    return Restr(replaced, Var(rd))


def _rewrite_term(ctx, t: Term, src: Term, dst: Term, st: _RewriteState) -> Term:
    if st.done:
        return t
    hit = _match_restriction(ctx, t, src, dst)
    if hit is not None:
        st.count += 1
        if st.count == st.target:
            st.done = True
            return hit
    if isinstance(t, Restr):
        return Restr(t.sq, _rewrite_term(ctx, t.term, src, dst, st))
    return t


def _rewrite_formula(ctx, f: Formula, src: Term, dst: Term, st: _RewriteState,
                     depth: int = 0) -> Formula:
    if st.done:
        return f
    if isinstance(f, Forall):
        body = _rewrite_formula((f.quiver,) + ctx, f.body, src, dst, st, depth + 1)
        return Forall(f.quiver, body)
    if isinstance(f, Exists):
        body = _rewrite_formula((f.quiver,) + ctx, f.body, src, dst, st, depth + 1)
        return Exists(f.quiver, body)
    if isinstance(f, Imply):
        lhs = _rewrite_formula(ctx, f.lhs, src, dst, st, depth)
        return Imply(lhs, _rewrite_formula(ctx, f.rhs, src, dst, st, depth))
    if isinstance(f, And):
        lhs = _rewrite_formula(ctx, f.lhs, src, dst, st, depth)
        return And(lhs, _rewrite_formula(ctx, f.rhs, src, dst, st, depth))
    if isinstance(f, FTrue):
        return f
    s = shift_term(src, depth)
    d = shift_term(dst, depth)
    if isinstance(f, Commute):
        return Commute(_rewrite_term(ctx, f.term, s, d, st))
    lhs = _rewrite_term(ctx, f.lhs, s, d, st)
    return EqD(lhs, _rewrite_term(ctx, f.rhs, s, d, st))


# ---------------------------------------------------------------------------
# tactic application helpers


def _flatten_or_none(ctx, t: Term):
    try:
        return flatten_term(ctx, t)
    except SortError:
        return None


def _comauto_assumptions(s: Sequent, root: int):
    """Commuting-subdiagram and single-arc-equality premises over one root
    variable, in the root quiver's coordinates."""
    host = s.context[root]
    assms = []
    for p in s.premises:
        if isinstance(p, Commute):
            flat = _flatten_or_none(s.context, p.term)
            if flat and flat[0] == root:
                assms.append(SubquiverAssm(flat[1]))
        elif isinstance(p, EqD):
            fa = _flatten_or_none(s.context, p.lhs)
            fb = _flatten_or_none(s.context, p.rhs)
            if not fa or not fb or fa[0] != root or fb[0] != root:
                continue
            sa, sb = fa[1], fb[1]
            if len(sa.arc_indices) != 1 or len(sb.arc_indices) != 1:
                continue
            a, b = sa.arc_indices[0], sb.arc_indices[0]
            if host.arcs[a] == host.arcs[b] and a != b:
                u, v = host.arcs[a]
                assms.append(BipathAssm(Bipath(u, v, (a,), (b,))))
    return assms


def _comauto_applies(s: Sequent) -> bool:
    """The commutativity goal follows from commuting-subdiagram premises over
    the same root variable.

    First the frontier-graph procedure decides whether the whole root diagram
    must commute; when that is inconclusive (the goal may concern only a
    subdiagram), fall back to the exact closure of the premises' bipaths and
    check the goal subdiagram's path pairs directly.  Both routes are sound.
    """
    goal = s.goal
    if not isinstance(goal, Commute):
        return False
    flat = _flatten_or_none(s.context, goal.term)
    if flat is None:
        return False
    root, sq_goal = flat
    host = s.context[root]
    if not is_acyclic(host):
        return False
    assms = _comauto_assumptions(s, root)
    if commerge(host, assms):
        return True
    try:
        gens: list[Bipath] = []
        for a in assms:
            if isinstance(a, SubquiverAssm):
                gens.extend(subquiver_bipaths(host, a.sq))
            else:
                gens.append(a.bipath)
        part = closure(host, gens)
    except CapExceededError:
        return False
    restricted = quiver_restr(sq_goal, host)
    for up in range(restricted.n):
        for vp in range(restricted.n):
            if up == vp:
                continue
            paths = all_paths(restricted, up, vp)
            if len(paths) < 2:
                continue
            u, v = sq_goal.vertices[up], sq_goal.vertices[vp]
            host_paths = [tuple(sq_goal.arc_indices[j] for j in p.steps) for p in paths]
            first = host_paths[0]
            for other in host_paths[1:]:
                if not part.same_class(u, v, first, other):
                    return False
    return True


def _run_proof(s: Sequent, proof: Proof, registry: "LemmaRegistry | None") -> Sequent | None:
    for tac in proof:
        s = apply_tactic(tac, s, registry)
        if s is None:
            return None
    return s


def _closes(s: Sequent, proof: Proof, registry: "LemmaRegistry | None") -> bool:
    final = _run_proof(s, proof, registry)
    return final is not None and final.goal == FTRUE


def _glued_quiver(qa: Quiver, sq1: Subquiver, qb: Quiver, sq2: Subquiver):
    """Amalgamate qb onto qa, identifying position-wise the vertices and arcs
    the two selections share.  Returns (glued, qb_part_subquiver)."""
    vmap: dict[int, int] = {}
    for pos, xb in enumerate(sq2.vertices):
        vmap[xb] = sq1.vertices[pos]
    fresh = qa.n
    for xb in range(qb.n):
        if xb not in vmap:
            vmap[xb] = fresh
            fresh += 1
    shared_arc: dict[int, int] = {}
    for pos, jb in enumerate(sq2.arc_indices):
        shared_arc[jb] = sq1.arc_indices[pos]
    arcs = list(qa.arcs)
    arc_map: dict[int, int] = {}
    for j, (sb, tb) in enumerate(qb.arcs):
        if j in shared_arc:
            arc_map[j] = shared_arc[j]
        else:
            arc_map[j] = len(arcs)
            arcs.append((vmap[sb], vmap[tb]))
    glued = Quiver(fresh, tuple(arcs))
    qb_part = Subquiver(
        tuple(vmap[x] for x in range(qb.n)),
        tuple(arc_map[j] for j in range(len(qb.arcs))),
    )
    return glued, qb_part


def _saturation(q: Quiver) -> tuple[Quiver, list[tuple[int, int, int]]]:
    """Append one composite arc per composable ordered arc pair; returns the
    extended quiver and (first, second, new_index) triples in append order."""
    new: list[tuple[int, int]] = []
    triples: list[tuple[int, int, int]] = []
    pairs = [
        (a, b)
        for a in range(len(q.arcs))
        for b in range(len(q.arcs))
        if q.tgt(a) == q.src(b)
    ]
    pairs.sort(key=lambda ab: (min(ab), max(ab)))
    base = len(q.arcs)
    for a, b in pairs:
        idx = base + len(new)
        new.append((q.src(a), q.tgt(b)))
        triples.append((a, b, idx))
    return Quiver(q.n, q.arcs + tuple(new)), triples


# ---------------------------------------------------------------------------
# tactic application


def apply_tactic(tac: Tactic, s: Sequent, registry: LemmaRegistry | None = None) -> Sequent | None:
    """Apply one tactic; None when its guard does not match.  Successful
    results are well-formed whenever the input is, and their evaluation
    implies the input's."""
    out = _apply(tac, s, registry)
    if out is None:
        return None
    return Sequent(
        out.context,
        tuple(canonical_formula(out.context, p) for p in out.premises),
        canonical_formula(out.context, out.goal),
    )


def _apply(tac: Tactic, s: Sequent, registry: LemmaRegistry | None) -> Sequent | None:
    if isinstance(tac, Intro):
        if not isinstance(s.goal, Forall):
            return None
        return Sequent(
            (s.goal.quiver,) + s.context,
            tuple(shift_formula(p, 1) for p in s.premises),
            s.goal.body,
        )

    if isinstance(tac, IntroImply):
        if not isinstance(s.goal, Imply):
            return None
        return Sequent(s.context, s.premises + (s.goal.lhs,), s.goal.rhs)

    if isinstance(tac, Assumption):
        i = tac.premise
        if 0 <= i < len(s.premises) and s.premises[i] == s.goal:
            return Sequent(s.context, s.premises, FTRUE)
        return None

    if isinstance(tac, Witness):
        if not isinstance(s.goal, Exists):
            return None
        try:
            sort = term_sort(s.context, tac.term)
        except SortError:
            return None
        if sort != s.goal.quiver:
            return None
        return Sequent(s.context, s.premises, instantiate(s.goal.body, tac.term))

    if isinstance(tac, AndIntro):
        if not isinstance(s.goal, And):
            return None
        if not _closes(Sequent(s.context, s.premises, s.goal.lhs), tac.left_proof, registry):
            return None
        return Sequent(s.context, s.premises, s.goal.rhs)

    if isinstance(tac, SpecializePremise):
        i = tac.premise
        if not (0 <= i < len(s.premises)) or not isinstance(s.premises[i], Forall):
            return None
        prem: Forall = s.premises[i]
        try:
            sort = term_sort(s.context, tac.term)
        except SortError:
            return None
        if sort != prem.quiver:
            return None
        new = list(s.premises)
        new[i] = instantiate(prem.body, tac.term)
        return Sequent(s.context, tuple(new), s.goal)

    if isinstance(tac, DetachPremise):
        i, j = tac.premise, tac.using
        if not (0 <= i < len(s.premises) and 0 <= j < len(s.premises)):
            return None
        if not isinstance(s.premises[i], Imply):
            return None
        imp: Imply = s.premises[i]
        if s.premises[j] != imp.lhs:
            return None
        new = list(s.premises)
        new[i] = imp.rhs
        return Sequent(s.context, tuple(new), s.goal)

    if isinstance(tac, RewriteEqD):
        i = tac.premise
        if not (0 <= i < len(s.premises)) or not isinstance(s.premises[i], EqD):
            return None
        eq: EqD = s.premises[i]
        if tac.direction == "->":
            src, dst = eq.lhs, eq.rhs
        elif tac.direction == "<-":
            src, dst = eq.rhs, eq.lhs
        else:
            return None
        if tac.occurrence < 1:
            return None
        st = _RewriteState(tac.occurrence)
        goal = _rewrite_formula(s.context, s.goal, src, dst, st)
        if not st.done:
            return None
        return Sequent(s.context, s.premises, goal)

    if isinstance(tac, Comauto):
        if not _comauto_applies(s):
            return None
        return Sequent(s.context, s.premises, FTRUE)

    if isinstance(tac, ApplyLemma):
        if registry is None:
            return None
        entry = registry.get(tac.name)
        if entry is None or s.goal != entry.formula:
            return None
        return Sequent(s.context, s.premises, FTRUE)

    if isinstance(tac, ApplyDualLemma):
        if registry is None:
            return None
        entry = registry.get(tac.name)
        if entry is None or s.goal != formula_dual(entry.formula):
            return None
        return Sequent(s.context, s.premises, FTRUE)

    if isinstance(tac, TrueIntro):
        if s.goal != FTRUE:
            return None
        return s

    if isinstance(tac, Have):
        if not formula_wf(s.context, tac.formula):
            return None
        if not _closes(Sequent(s.context, s.premises, tac.formula), tac.proof, registry):
            return None
        return Sequent(s.context, s.premises + (tac.formula,), s.goal)

    if isinstance(tac, EqDRefl):
        if isinstance(s.goal, EqD) and s.goal.lhs == s.goal.rhs:
            return Sequent(s.context, s.premises, FTRUE)
        return None

    if isinstance(tac, Paste):
        i = tac.premise
        if not (0 <= i < len(s.premises)) or not isinstance(s.premises[i], EqD):
            return None
        eq: EqD = s.premises[i]
        fa = _flatten_or_none(s.context, eq.lhs)
        fb = _flatten_or_none(s.context, eq.rhs)
        if fa is None or fb is None:
            return None
        (ra, sq1), (rb, sq2) = fa, fb
        if ra == rb:
            return None
        if len(set(sq1.arc_indices)) != len(sq1.arc_indices):
            return None
        if len(set(sq2.arc_indices)) != len(sq2.arc_indices):
            return None
        qa, qb = s.context[ra], s.context[rb]
        glued, qb_part = _glued_quiver(qa, sq1, qb, sq2)
        if not is_acyclic(glued):
            return None
        qa_part = Subquiver(tuple(range(qa.n)), tuple(range(len(qa.arcs))))
        new_premises = tuple(shift_formula(p, 1) for p in s.premises) + (
            EqD(Restr(qa_part, Var(0)), Var(ra + 1)),
            EqD(Restr(qb_part, Var(0)), Var(rb + 1)),
        )
        return Sequent((glued,) + s.context, new_premises, shift_formula(s.goal, 1))

    if isinstance(tac, Saturate):
        k = tac.var
        if not (0 <= k < len(s.context)):
            return None
        q = s.context[k]
        if not is_acyclic(q):
            return None
        extended, triples = _saturation(q)
        ctx = list(s.context)
        ctx[k] = extended
        new_premises = list(s.premises)
        for a, b, c in triples:
            verts = tuple(sorted({q.src(a), q.tgt(a), q.tgt(b)}))
            sq = Subquiver(verts, (min(a, b), max(a, b), c))
            new_premises.append(Commute(Restr(sq, Var(k))))
        return Sequent(tuple(ctx), tuple(new_premises), s.goal)

    raise TypeError(f"not a tactic: {tac!r}")


# ---------------------------------------------------------------------------
# duality of tactics and proofs


def dual_tactic(tac: Tactic) -> Tactic:
    """The tactic that mirrors `tac` on dual sequents: dual(t(s)) equals
    dual_tactic(t)(dual(s)) wherever either side applies."""
    if isinstance(tac, ApplyLemma):
        return ApplyDualLemma(tac.name)
    if isinstance(tac, ApplyDualLemma):
        return ApplyLemma(tac.name)
    if isinstance(tac, AndIntro):
        return AndIntro(dual_proof(tac.left_proof))
    if isinstance(tac, Have):
        return Have(formula_dual(tac.formula), dual_proof(tac.proof))
    return tac


def dual_proof(proof: Proof) -> Proof:
    return tuple(dual_tactic(t) for t in proof)


# ---------------------------------------------------------------------------
# proof checking


def check_proof(f: Formula, proof: Proof, registry: LemmaRegistry | None = None) -> bool:
    ok, _ = check_proof_report(f, proof, registry)
    return ok


def check_proof_report(f: Formula, proof: Proof,
                       registry: LemmaRegistry | None = None) -> tuple[bool, int | None]:
    """Verdict plus the index of the first failing step (None when all steps
    apply; the verdict may still be False if the final goal is not closed)."""
    if not formula_wf((), f):
        return False, None
    s = sequent_of_formula(f)
    for idx, tac in enumerate(proof):
        nxt = apply_tactic(tac, s, registry)
        if nxt is None:
            return False, idx
        s = nxt
    return s.goal == FTRUE, None


# ---------------------------------------------------------------------------
# biproofs


@dataclass(frozen=True)
class Biproof:
    primal: Proof
    dual: Proof


def biproof_dual_check(bpf: Biproof) -> None:
    if len(bpf.primal) != len(bpf.dual):
        raise BiproofIllFormedError(
            f"length mismatch: {len(bpf.primal)} vs {len(bpf.dual)}"
        )
    for i, (p, d) in enumerate(zip(bpf.primal, bpf.dual)):
        if dual_tactic(p) != d:
            raise BiproofIllFormedError(f"step {i} is not the dual of its primal")


def check_biproof(f: Formula, bpf: Biproof, registry: LemmaRegistry | None = None) -> bool:
    """Verify pairwise duality, then return the common verdict of the primal
    proof on `f` and the dual proof on the dual formula."""
    biproof_dual_check(bpf)
    primal_ok = check_proof(f, bpf.primal, registry)
    dual_ok = check_proof(formula_dual(f), bpf.dual, registry)
    if primal_ok != dual_ok:
        raise RuntimeError(
            "duality violation: primal and dual proofs disagree"
        )
    return primal_ok


# ---------------------------------------------------------------------------
# applicability hints


def applicable_tactics(s: Sequent, registry: LemmaRegistry | None = None) -> list[str]:
    """Names of tactic forms whose guard matches the sequent, syntactically."""
    hints: list[str] = []
    goal = s.goal
    if isinstance(goal, Forall):
        hints.append("intro")
    if isinstance(goal, Imply):
        hints.append("intro_imply")
    if isinstance(goal, Exists):
        hints.append("witness <term>")
    if isinstance(goal, And):
        hints.append("and_intro { ... }")
    if isinstance(goal, FTrue):
        hints.append("qed")
    if isinstance(goal, EqD) and goal.lhs == goal.rhs:
        hints.append("eqd_refl")
    if isinstance(goal, Commute) and _comauto_applies(s):
        hints.append("comauto")
    for i, p in enumerate(s.premises):
        if p == goal:
            hints.append(f"assumption {i}")
        if isinstance(p, Forall):
            hints.append(f"specialize {i} <term>")
        if isinstance(p, Imply):
            hints.append(f"detach {i} <j>")
        if isinstance(p, EqD):
            hints.append(f"rewrite {i} -> occ 1")
            hints.append(f"paste {i}")
    if s.context:
        hints.append("saturate <k>")
    if registry is not None:
        for name in registry.names():
            entry = registry.get(name)
            if entry and s.goal == entry.formula:
                hints.append(f"apply_lemma {name}")
            if entry and s.goal == formula_dual(entry.formula):
                hints.append(f"apply_dual_lemma {name}")
    hints.append("have <formula> { ... }")
    return hints
