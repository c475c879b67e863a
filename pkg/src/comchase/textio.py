"""Concrete text syntax: quivers, formulas, proof scripts, models.

Formats round-trip: parse(print(x)) == x.  Quiver files look like
`{n: 3; arcs: (0,1), (0,2)}`; formulas use `forall {(0,1)} . f`, `f -> g`,
`f /\\ g`, `true`, `commute(t)`, `t == u` with terms `$0`,
`restrA([arcs], t)` (vertices inferred from the host sort) and
`restr([verts];[arcs], t)`.  Proof scripts are one tactic per line with
brace-delimited blocks for tactics that embed proofs.
"""

from __future__ import annotations

import json
import re

from .errors import ParseError, SortError
from .formulas import (
    And,
    Commute,
    Context,
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
    term_sort,
)
from .kernel import (
    AndIntro,
    ApplyDualLemma,
    ApplyLemma,
    Comauto,
    DetachPremise,
    EqDRefl,
    Have,
    Intro,
    IntroImply,
    LemmaRegistry,
    Paste,
    Proof,
    RewriteEqD,
    Saturate,
    SpecializePremise,
    Tactic,
    TrueIntro,
    Witness,
)
from .kernel import Assumption as KAssumption  # tactic; distinct from commerge.Assumption
from .models import FinCat
from .pathrel import Bipath
from .quiver import Quiver, Subquiver
from .commerge import Assumption, BipathAssm, SubquiverAssm


# ---------------------------------------------------------------------------
# tokenizer

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<sym>->|/\\|==|<-|[{}()\[\],;.$:])|(?P<bad>\S))"
)


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.toks: list[tuple[str, str, int, int]] = []  # kind, value, line, col
        line, col = 1, 1
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if not m or m.end() == pos:
                break
            for ch in text[pos:m.start(m.lastgroup)]:
                if ch == "\n":
                    line += 1
                    col = 1
                else:
                    col += 1
            kind = m.lastgroup
            val = m.group(kind)
            if kind == "bad":
                raise ParseError(f"unexpected character {val!r}", line, col)
            self.toks.append((kind, val, line, col))
            for ch in val:
                if ch == "\n":
                    line += 1
                    col = 1
                else:
                    col += 1
            pos = m.end()
        self.i = 0
        self.end_line, self.end_col = line, col

    def peek(self) -> tuple[str, str, int, int] | None:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def next(self) -> tuple[str, str, int, int]:
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of input", self.end_line, self.end_col)
        self.i += 1
        return t

    def expect(self, value: str) -> None:
        t = self.next()
        if t[1] != value:
            raise ParseError(f"expected {value!r}, found {t[1]!r}", t[2], t[3])

    def at(self, value: str) -> bool:
        t = self.peek()
        return t is not None and t[1] == value

    def take(self, value: str) -> bool:
        if self.at(value):
            self.i += 1
            return True
        return False

    def number(self) -> int:
        t = self.next()
        if t[0] != "num":
            raise ParseError(f"expected a number, found {t[1]!r}", t[2], t[3])
        return int(t[1])

    def done(self) -> None:
        t = self.peek()
        if t is not None:
            raise ParseError(f"trailing input {t[1]!r}", t[2], t[3])


# ---------------------------------------------------------------------------
# quivers


def _parse_arc_list(tk: _Tokens) -> list[tuple[int, int]]:
    arcs = []
    while tk.at("("):
        tk.expect("(")
        s = tk.number()
        tk.expect(",")
        t = tk.number()
        tk.expect(")")
        arcs.append((s, t))
        if not tk.take(","):
            break
    return arcs


def _parse_quiver_body(tk: _Tokens) -> Quiver:
    """The inside of a `{...}` quiver literal: optional `n: k;` then arcs,
    optionally introduced by `arcs:`."""
    n = None
    if tk.at("n"):
        tk.next()
        tk.expect(":")
        n = tk.number()
        if not tk.take(";"):
            return Quiver(n, ())
    if tk.at("arcs"):
        tk.next()
        tk.expect(":")
    arcs = _parse_arc_list(tk)
    if n is None:
        n = 1 + max((max(s, t) for s, t in arcs), default=-1)
    return Quiver(n, tuple(arcs))


def parse_quiver(text: str) -> Quiver:
    tk = _Tokens(text)
    tk.expect("{")
    q = _parse_quiver_body(tk)
    tk.expect("}")
    tk.done()
    return q


def print_quiver(q: Quiver) -> str:
    arcs = ", ".join(f"({s},{t})" for s, t in q.arcs)
    if q.arcs:
        return f"{{n: {q.n}; arcs: {arcs}}}"
    return f"{{n: {q.n}}}"


def _print_quiver_literal(q: Quiver) -> str:
    filled = 1 + max((max(s, t) for s, t in q.arcs), default=-1)
    arcs = ", ".join(f"({s},{t})" for s, t in q.arcs)
    if q.n == filled:
        return "{" + arcs + "}"
    if q.arcs:
        return f"{{n: {q.n}; {arcs}}}"
    return f"{{n: {q.n}}}"


# ---------------------------------------------------------------------------
# formulas

# raw term nodes carry enough to resolve `restrA` once sorts are known
_RawVar = tuple  # ("var", k, line, col)


def _parse_int_list(tk: _Tokens) -> list[int]:
    tk.expect("[")
    out = []
    while not tk.at("]"):
        out.append(tk.number())
        if not tk.take(","):
            break
    tk.expect("]")
    return out


def _parse_raw_term(tk: _Tokens):
    t = tk.peek()
    if t is None:
        raise ParseError("expected a term", tk.end_line, tk.end_col)
    if tk.take("$"):
        return ("var", tk.number(), t[2], t[3])
    if t[1] == "restrA":
        tk.next()
        tk.expect("(")
        arcs = _parse_int_list(tk)
        tk.expect(",")
        inner = _parse_raw_term(tk)
        tk.expect(")")
        return ("restrA", arcs, inner, t[2], t[3])
    if t[1] == "restr":
        tk.next()
        tk.expect("(")
        verts = _parse_int_list(tk)
        tk.expect(";")
        arcs = _parse_int_list(tk)
        tk.expect(",")
        inner = _parse_raw_term(tk)
        tk.expect(")")
        return ("restr", verts, arcs, inner, t[2], t[3])
    raise ParseError(f"expected a term, found {t[1]!r}", t[2], t[3])


def _parse_raw_formula(tk: _Tokens):
    return _parse_raw_imply(tk)


def _parse_raw_imply(tk: _Tokens):
    lhs = _parse_raw_conj(tk)
    if tk.take("->"):
        return ("imply", lhs, _parse_raw_imply(tk))
    return lhs


def _parse_raw_conj(tk: _Tokens):
    lhs = _parse_raw_unit(tk)
    if tk.take("/\\"):
        return ("and", lhs, _parse_raw_conj(tk))
    return lhs


def _parse_raw_unit(tk: _Tokens):
    t = tk.peek()
    if t is None:
        raise ParseError("expected a formula", tk.end_line, tk.end_col)
    if t[1] in ("forall", "exists"):
        tk.next()
        tk.expect("{")
        q = _parse_quiver_body(tk)
        tk.expect("}")
        tk.expect(".")
        body = _parse_raw_imply(tk)
        return ("forall" if t[1] == "forall" else "exists", q, body)
    if t[1] == "true":
        tk.next()
        return ("true",)
    if t[1] == "commute":
        tk.next()
        tk.expect("(")
        term = _parse_raw_term(tk)
        tk.expect(")")
        return ("commute", term)
    if t[1] == "(":
        tk.next()
        f = _parse_raw_imply(tk)
        tk.expect(")")
        # allow an atom-level `== term` after a parenthesized... no: equality
        # only joins terms, so a parenthesized formula stands alone
        return f
    # otherwise it must be an equality between terms
    lhs = _parse_raw_term(tk)
    tk.expect("==")
    rhs = _parse_raw_term(tk)
    return ("eqd", lhs, rhs)


def _elaborate_term(raw, ctx: Context) -> Term:
    kind = raw[0]
    if kind == "var":
        return Var(raw[1])
    if kind == "restr":
        inner = _elaborate_term(raw[3], ctx)
        return Restr(Subquiver(tuple(raw[1]), tuple(raw[2])), inner)
    # restrA: vertices inferred from the inner term's sort
    _, arcs, raw_inner, line, col = raw
    inner = _elaborate_term(raw_inner, ctx)
    try:
        host = term_sort(ctx, inner)
    except SortError as e:
        raise ParseError(f"cannot infer vertices: {e}", line, col) from e
    bad = [i for i in arcs if not (0 <= i < len(host.arcs))]
    if bad:
        raise ParseError(f"arc indices {bad} out of bound", line, col)
    verts = sorted({e for i in arcs for e in host.arcs[i]})
    return Restr(Subquiver(tuple(verts), tuple(arcs)), inner)


def _elaborate(raw, ctx: Context) -> Formula:
    kind = raw[0]
    if kind == "forall":
        return Forall(raw[1], _elaborate(raw[2], (raw[1],) + ctx))
    if kind == "exists":
        return Exists(raw[1], _elaborate(raw[2], (raw[1],) + ctx))
    if kind == "imply":
        return Imply(_elaborate(raw[1], ctx), _elaborate(raw[2], ctx))
    if kind == "and":
        return And(_elaborate(raw[1], ctx), _elaborate(raw[2], ctx))
    if kind == "true":
        return FTRUE
    if kind == "commute":
        return Commute(_elaborate_term(raw[1], ctx))
    return EqD(_elaborate_term(raw[1], ctx), _elaborate_term(raw[2], ctx))


def parse_formula(text: str, ctx: Context = ()) -> Formula:
    tk = _Tokens(text)
    raw = _parse_raw_formula(tk)
    tk.done()
    return _elaborate(raw, ctx)


def _print_term(t: Term, ctx: Context) -> str:
    if isinstance(t, Var):
        return f"${t.index}"
    inner = _print_term(t.term, ctx)
    use_arcs_form = False
    try:
        host = term_sort(ctx, t.term)
        inferred = tuple(sorted({e for i in t.sq.arc_indices for e in host.arcs[i]}))
        use_arcs_form = inferred == t.sq.vertices
    except SortError:
        pass
    arcs = ",".join(str(i) for i in t.sq.arc_indices)
    if use_arcs_form:
        return f"restrA([{arcs}], {inner})"
    verts = ",".join(str(v) for v in t.sq.vertices)
    return f"restr([{verts}];[{arcs}], {inner})"


def print_formula(f: Formula, ctx: Context = ()) -> str:
    return _print_imply(f, ctx)


# Quantifier bodies extend as far right as possible, so a quantifier prints
# bare only in tail position (top level, quantifier body, right of `->`).

def _print_imply(f: Formula, ctx: Context) -> str:
    if isinstance(f, Forall):
        return f"forall {_print_quiver_literal(f.quiver)} . {_print_imply(f.body, (f.quiver,) + ctx)}"
    if isinstance(f, Exists):
        return f"exists {_print_quiver_literal(f.quiver)} . {_print_imply(f.body, (f.quiver,) + ctx)}"
    if isinstance(f, Imply):
        return f"{_print_conj(f.lhs, ctx)} -> {_print_imply(f.rhs, ctx)}"
    return _print_conj(f, ctx)


def _print_conj(f: Formula, ctx: Context) -> str:
    if isinstance(f, And):
        return f"{_print_unit(f.lhs, ctx)} /\\ {_print_conj(f.rhs, ctx)}"
    return _print_unit(f, ctx)


def _print_unit(f: Formula, ctx: Context) -> str:
    if isinstance(f, FTrue):
        return "true"
    if isinstance(f, Commute):
        return f"commute({_print_term(f.term, ctx)})"
    if isinstance(f, EqD):
        return f"{_print_term(f.lhs, ctx)} == {_print_term(f.rhs, ctx)}"
    return f"({_print_imply(f, ctx)})"


# ---------------------------------------------------------------------------
# formula JSON AST


def formula_to_json_dict(f: Formula) -> dict:
    if isinstance(f, Forall):
        return {"tag": "forall", "quiver": f.quiver.to_json_dict(), "body": formula_to_json_dict(f.body)}
    if isinstance(f, Exists):
        return {"tag": "exists", "quiver": f.quiver.to_json_dict(), "body": formula_to_json_dict(f.body)}
    if isinstance(f, Imply):
        return {"tag": "imply", "lhs": formula_to_json_dict(f.lhs), "rhs": formula_to_json_dict(f.rhs)}
    if isinstance(f, And):
        return {"tag": "and", "lhs": formula_to_json_dict(f.lhs), "rhs": formula_to_json_dict(f.rhs)}
    if isinstance(f, FTrue):
        return {"tag": "true"}
    if isinstance(f, Commute):
        return {"tag": "commute", "term": term_to_json_dict(f.term)}
    return {"tag": "eqd", "lhs": term_to_json_dict(f.lhs), "rhs": term_to_json_dict(f.rhs)}


def term_to_json_dict(t: Term) -> dict:
    if isinstance(t, Var):
        return {"tag": "var", "index": t.index}
    return {"tag": "restr", "sq": t.sq.to_json_dict(), "term": term_to_json_dict(t.term)}


def formula_from_json_dict(d: dict) -> Formula:
    tag = d["tag"]
    if tag == "forall":
        return Forall(Quiver.from_json_dict(d["quiver"]), formula_from_json_dict(d["body"]))
    if tag == "exists":
        return Exists(Quiver.from_json_dict(d["quiver"]), formula_from_json_dict(d["body"]))
    if tag == "imply":
        return Imply(formula_from_json_dict(d["lhs"]), formula_from_json_dict(d["rhs"]))
    if tag == "and":
        return And(formula_from_json_dict(d["lhs"]), formula_from_json_dict(d["rhs"]))
    if tag == "true":
        return FTRUE
    if tag == "commute":
        return Commute(term_from_json_dict(d["term"]))
    if tag == "eqd":
        return EqD(term_from_json_dict(d["lhs"]), term_from_json_dict(d["rhs"]))
    raise ParseError(f"unknown formula tag {tag!r}")


def term_from_json_dict(d: dict) -> Term:
    if d["tag"] == "var":
        return Var(int(d["index"]))
    if d["tag"] == "restr":
        return Restr(Subquiver.from_json_dict(d["sq"]), term_from_json_dict(d["term"]))
    raise ParseError(f"unknown term tag {d['tag']!r}")


# ---------------------------------------------------------------------------
# proof scripts


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].rstrip()


def _parse_block(lines: list[str], start: int, lineno_of: list[int]) -> tuple[list[Tactic], int]:
    """Parse tactic lines until the closing `}`; returns the tactics and the
    index just past the block."""
    out: list[Tactic] = []
    i = start
    while i < len(lines):
        line = lines[i].strip()
        if line == "}":
            return out, i + 1
        tac, i = _parse_tactic_line(lines, i, lineno_of)
        out.append(tac)
    last = lineno_of[-1] if lineno_of else 1
    raise ParseError("unterminated block: missing '}'", last, 1)


def _parse_tactic_line(lines: list[str], i: int, lineno_of: list[int]) -> tuple[Tactic, int]:
    line = lines[i].strip()
    ln = lineno_of[i]

    def fail(msg: str):
        raise ParseError(msg, ln, 1)

    if line.endswith("{"):
        head = line[:-1].strip()
        if head == "and_intro":
            block, nxt = _parse_block(lines, i + 1, lineno_of)
            return AndIntro(tuple(block)), nxt
        if head.startswith("have "):
            formula = parse_formula_in_open_context(head[len("have "):].strip())
            block, nxt = _parse_block(lines, i + 1, lineno_of)
            return Have(formula, tuple(block)), nxt
        fail(f"unknown block tactic {head!r}")

    words = line.split()
    head = words[0]
    rest = line[len(head):].strip()
    try:
        if head == "intro" and not rest:
            return Intro(), i + 1
        if head == "intro_imply" and not rest:
            return IntroImply(), i + 1
        if head == "assumption":
            return KAssumption(int(rest)), i + 1
        if head == "witness":
            return Witness(parse_term_in_open_context(rest)), i + 1
        if head == "specialize":
            idx, term_text = rest.split(None, 1)
            return SpecializePremise(int(idx), parse_term_in_open_context(term_text)), i + 1
        if head == "detach":
            a, b = rest.split()
            return DetachPremise(int(a), int(b)), i + 1
        if head == "rewrite":
            m = re.fullmatch(r"(\d+)\s*(->|<-)\s*occ\s+(\d+)", rest)
            if not m:
                fail(f"malformed rewrite: {line!r}")
            return RewriteEqD(int(m.group(1)), m.group(2), int(m.group(3))), i + 1
        if head == "comauto" and not rest:
            return Comauto(), i + 1
        if head == "apply_lemma":
            return ApplyLemma(rest), i + 1
        if head == "apply_dual_lemma":
            return ApplyDualLemma(rest), i + 1
        if head == "qed" and not rest:
            return TrueIntro(), i + 1
        if head == "eqd_refl" and not rest:
            return EqDRefl(), i + 1
        if head == "paste":
            return Paste(int(rest)), i + 1
        if head == "saturate":
            return Saturate(int(rest)), i + 1
    except ParseError:
        raise
    except ValueError as e:
        fail(f"malformed tactic arguments in {line!r}: {e}")
    fail(f"unknown tactic {head!r}")


def parse_term_in_open_context(text: str) -> Term:
    """Terms inside proof scripts reference the live sequent context, so
    `restrA` cannot be resolved here; only the explicit form is accepted."""
    tk = _Tokens(text)
    raw = _parse_raw_term(tk)
    tk.done()
    return _elaborate_term_open(raw)


def _elaborate_term_open(raw) -> Term:
    if raw[0] == "var":
        return Var(raw[1])
    if raw[0] == "restr":
        return Restr(Subquiver(tuple(raw[1]), tuple(raw[2])), _elaborate_term_open(raw[3]))
    raise ParseError("restrA is not available in proof scripts; use restr([v];[a], t)",
                     raw[-2], raw[-1])


def parse_formula_in_open_context(text: str) -> Formula:
    """Formulas inside proof scripts (`have`): explicit restrictions only."""
    tk = _Tokens(text)
    raw = _parse_raw_formula(tk)
    tk.done()
    return _elaborate_open(raw)


def _elaborate_open(raw) -> Formula:
    kind = raw[0]
    if kind == "forall":
        return Forall(raw[1], _elaborate_open(raw[2]))
    if kind == "exists":
        return Exists(raw[1], _elaborate_open(raw[2]))
    if kind == "imply":
        return Imply(_elaborate_open(raw[1]), _elaborate_open(raw[2]))
    if kind == "and":
        return And(_elaborate_open(raw[1]), _elaborate_open(raw[2]))
    if kind == "true":
        return FTRUE
    if kind == "commute":
        return Commute(_elaborate_term_open(raw[1]))
    return EqD(_elaborate_term_open(raw[1]), _elaborate_term_open(raw[2]))


def parse_proof(text: str) -> Proof:
    physical = text.splitlines()
    lines: list[str] = []
    lineno_of: list[int] = []
    for n, raw in enumerate(physical, start=1):
        stripped = _strip_comment(raw)
        if stripped.strip():
            lines.append(stripped)
            lineno_of.append(n)
    out: list[Tactic] = []
    i = 0
    while i < len(lines):
        if lines[i].strip() == "}":
            raise ParseError("unmatched '}'", lineno_of[i], 1)
        tac, i = _parse_tactic_line(lines, i, lineno_of)
        out.append(tac)
    return tuple(out)


def _print_open_term(t: Term) -> str:
    if isinstance(t, Var):
        return f"${t.index}"
    verts = ",".join(str(v) for v in t.sq.vertices)
    arcs = ",".join(str(i) for i in t.sq.arc_indices)
    return f"restr([{verts}];[{arcs}], {_print_open_term(t.term)})"


def _print_open_formula(f: Formula) -> str:
    if isinstance(f, Forall):
        return f"forall {_print_quiver_literal(f.quiver)} . {_print_open_formula(f.body)}"
    if isinstance(f, Exists):
        return f"exists {_print_quiver_literal(f.quiver)} . {_print_open_formula(f.body)}"
    if isinstance(f, Imply):
        return f"{_print_open_conj(f.lhs)} -> {_print_open_formula(f.rhs)}"
    return _print_open_conj(f)


def _print_open_conj(f: Formula) -> str:
    if isinstance(f, And):
        return f"{_print_open_unit(f.lhs)} /\\ {_print_open_conj(f.rhs)}"
    return _print_open_unit(f)


def _print_open_unit(f: Formula) -> str:
    if isinstance(f, FTrue):
        return "true"
    if isinstance(f, Commute):
        return f"commute({_print_open_term(f.term)})"
    if isinstance(f, EqD):
        return f"{_print_open_term(f.lhs)} == {_print_open_term(f.rhs)}"
    return f"({_print_open_formula(f)})"


def print_tactic(tac: Tactic, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(tac, Intro):
        return pad + "intro"
    if isinstance(tac, IntroImply):
        return pad + "intro_imply"
    if isinstance(tac, KAssumption):
        return pad + f"assumption {tac.premise}"
    if isinstance(tac, Witness):
        return pad + f"witness {_print_open_term(tac.term)}"
    if isinstance(tac, AndIntro):
        inner = "\n".join(print_tactic(t, indent + 1) for t in tac.left_proof)
        return f"{pad}and_intro {{\n{inner}\n{pad}}}"
    if isinstance(tac, SpecializePremise):
        return pad + f"specialize {tac.premise} {_print_open_term(tac.term)}"
    if isinstance(tac, DetachPremise):
        return pad + f"detach {tac.premise} {tac.using}"
    if isinstance(tac, RewriteEqD):
        return pad + f"rewrite {tac.premise} {tac.direction} occ {tac.occurrence}"
    if isinstance(tac, Comauto):
        return pad + "comauto"
    if isinstance(tac, ApplyLemma):
        return pad + f"apply_lemma {tac.name}"
    if isinstance(tac, ApplyDualLemma):
        return pad + f"apply_dual_lemma {tac.name}"
    if isinstance(tac, TrueIntro):
        return pad + "qed"
    if isinstance(tac, Have):
        inner = "\n".join(print_tactic(t, indent + 1) for t in tac.proof)
        return f"{pad}have {_print_open_formula(tac.formula)} {{\n{inner}\n{pad}}}"
    if isinstance(tac, EqDRefl):
        return pad + "eqd_refl"
    if isinstance(tac, Paste):
        return pad + f"paste {tac.premise}"
    if isinstance(tac, Saturate):
        return pad + f"saturate {tac.var}"
    raise TypeError(f"not a tactic: {tac!r}")


def print_proof(proof: Proof) -> str:
    return "\n".join(print_tactic(t) for t in proof) + ("\n" if proof else "")


# ---------------------------------------------------------------------------
# models and assumptions


def parse_model(text: str) -> FinCat:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from e
    try:
        return FinCat.from_json_dict(data)
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"malformed category description: {e}") from e


def print_model(cat: FinCat) -> str:
    return json.dumps(cat.to_json_dict(), indent=2) + "\n"


def assumptions_from_json_list(data: list) -> list[Assumption]:
    out: list[Assumption] = []
    for item in data:
        if "subquiver" in item:
            out.append(SubquiverAssm(Subquiver.from_json_dict(item["subquiver"])))
        elif "bipath" in item:
            out.append(BipathAssm(Bipath.from_json_dict(item["bipath"])))
        else:
            raise ParseError(f"assumption must be a subquiver or a bipath: {item}")
    return out


def parse_assumptions(text: str) -> list[Assumption]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from e
    if not isinstance(data, list):
        raise ParseError("assumption file must hold a JSON array")
    return assumptions_from_json_list(data)


def print_assumptions(assms: list[Assumption]) -> str:
    items = []
    for a in assms:
        if isinstance(a, SubquiverAssm):
            items.append({"subquiver": a.sq.to_json_dict()})
        else:
            items.append({"bipath": a.bipath.to_json_dict()})
    return json.dumps(items, indent=2) + "\n"


# ---------------------------------------------------------------------------
# lemma registry persistence


def registry_to_json(reg: LemmaRegistry) -> str:
    lemmas = []
    for name in reg.names():
        entry = reg.get(name)
        lemmas.append(
            {
                "name": name,
                "formula": print_formula(entry.formula),
                "proof": print_proof(entry.proof),
                "dual_proof": print_proof(entry.dual_proof) if entry.dual_proof else None,
            }
        )
    return json.dumps({"lemmas": lemmas}, indent=2) + "\n"


def registry_from_json(text: str) -> LemmaRegistry:
    data = json.loads(text)
    reg = LemmaRegistry()
    for item in data.get("lemmas", []):
        formula = parse_formula(item["formula"])
        proof = parse_proof(item["proof"])
        dual = parse_proof(item["dual_proof"]) if item.get("dual_proof") else None
        reg.register(item["name"], formula, proof, dual)
    return reg
