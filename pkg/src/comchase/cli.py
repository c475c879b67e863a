"""Command-line surface: batch checking, automation, and the service runner.

Exit codes: 0 for success / a true verdict, 1 for a false verdict or failed
check, 2 for usage or parse errors.  Human-readable messages go to stderr;
`--json` prints machine-readable results on stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .commerge import commerge_report
from .comcut import comcut
from .errors import CapExceededError, CycleError, IllFormedError, ParseError
from .formulas import formula_dual, formula_wf
from .kernel import Biproof, check_biproof, check_proof_report
from .models import FinCatModel, fincat_wf, formula_eval
from .pathrel import closure
from .quiver import quiver_dual, quiver_wf, to_dot
from . import textio

DEFAULT_REGISTRY_ENV = "COMCHASE_REGISTRY"


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from e


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(human)


def _load_registry(args):
    path = getattr(args, "registry", None) or os.environ.get(DEFAULT_REGISTRY_ENV)
    if path and Path(path).exists():
        return textio.registry_from_json(_read(path)), path
    from .kernel import LemmaRegistry

    return LemmaRegistry(), path


# ---------------------------------------------------------------------------
# subcommands


def _cmd_quiver(args) -> int:
    q = textio.parse_quiver(_read(args.file))
    if args.action == "check":
        ok = quiver_wf(q)
        _emit(args, {"wf": ok, "quiver": q.to_json_dict()}, f"well-formed: {ok}")
        return 0 if ok else 1
    if args.action == "dual":
        d = quiver_dual(q)
        _emit(args, {"quiver": d.to_json_dict()}, textio.print_quiver(d))
        return 0
    print(to_dot(q), end="")
    return 0


def _cmd_commerge(args) -> int:
    q = textio.parse_quiver(_read(args.quiver))
    assms = []
    for path in args.assume or []:
        assms.extend(textio.parse_assumptions(_read(path)))
    verdict, failing = commerge_report(q, assms)
    payload = {"verdict": verdict, "failing_pairs": failing}
    if verdict:
        _emit(args, payload, "commutes: true")
    else:
        lines = ["commutes: false"]
        for item in failing:
            comps = " | ".join("{" + ",".join(map(str, c)) + "}" for c in item["components"])
            lines.append(f"  pair ({item['u']},{item['v']}): components {comps}")
        _emit(args, payload, "\n".join(lines))
    return 0 if verdict else 1


def _human_bipath(b) -> str:
    left = ",".join(map(str, b.left)) or "empty"
    right = ",".join(map(str, b.right)) or "empty"
    return f"path({b.u}->{b.v} via arcs {left}) = path({b.u}->{b.v} via arcs {right})"


def _cmd_comcut(args) -> int:
    q = textio.parse_quiver(_read(args.quiver))
    bipaths = comcut(q)
    verified = None
    if args.verify:
        verified = closure(q, bipaths, cap=args.cap).is_full()
    payload = {
        "bipaths": [b.to_json_dict() for b in bipaths],
        "verified": verified,
    }
    lines = [_human_bipath(b) for b in bipaths]
    if verified is not None:
        lines.append(f"verification: closure is {'full' if verified else 'NOT full'}")
    if args.dot:
        for b in bipaths:
            overlay = {i: "blue" for i in b.left}
            overlay.update({i: "red" for i in b.right})
            lines.append(to_dot(q, overlay).rstrip("\n"))
    _emit(args, payload, "\n".join(lines) if lines else "no bipaths needed")
    return 0 if verified in (None, True) else 1


def _cmd_formula(args) -> int:
    f = textio.parse_formula(_read(args.file))
    if args.action == "check":
        ok = formula_wf((), f)
        _emit(args, {"wf": ok}, f"well-formed: {ok}")
        return 0 if ok else 1
    d = formula_dual(f)
    _emit(args, {"formula": textio.formula_to_json_dict(d)}, textio.print_formula(d))
    return 0


def _cmd_eval(args) -> int:
    f = textio.parse_formula(_read(args.formula))
    cat = textio.parse_model(_read(args.model))
    if not fincat_wf(cat):
        print("model fails the category laws", file=sys.stderr)
        return 2
    value = formula_eval(FinCatModel(cat), [], f, cap=args.cap)
    _emit(args, {"value": value}, f"evaluates to: {value}")
    return 0 if value else 1


def _cmd_proof(args) -> int:
    f = textio.parse_formula(_read(args.formula))
    proof = textio.parse_proof(_read(args.script))
    registry, _ = _load_registry(args)
    ok, failed_step = check_proof_report(f, proof, registry)
    payload = {"valid": ok, "failed_step": failed_step}
    if ok:
        _emit(args, payload, "proof: valid")
    elif failed_step is not None:
        _emit(args, payload, f"proof: invalid (step {failed_step} does not apply)")
    else:
        _emit(args, payload, "proof: invalid (goal not closed)")
    return 0 if ok else 1


def _cmd_biproof(args) -> int:
    f = textio.parse_formula(_read(args.formula))
    primal = textio.parse_proof(_read(args.primal))
    dual = textio.parse_proof(_read(args.dual))
    registry, _ = _load_registry(args)
    ok = check_biproof(f, Biproof(primal, dual), registry)
    _emit(args, {"valid": ok}, f"biproof: {'valid' if ok else 'invalid'}")
    return 0 if ok else 1


def _cmd_lemma(args) -> int:
    registry, path = _load_registry(args)
    if args.action == "list":
        names = registry.names()
        _emit(args, {"lemmas": names}, "\n".join(names) if names else "(no lemmas)")
        return 0
    # add
    f = textio.parse_formula(_read(args.formula))
    proof = textio.parse_proof(_read(args.script))
    dual = textio.parse_proof(_read(args.dual)) if args.dual else None
    try:
        registry.register(args.name, f, proof, dual)
    except ValueError as e:
        print(str(e), file=sys.stderr)
        return 1
    target = args.registry or path
    if not target:
        print("no registry path given (flag --registry or COMCHASE_REGISTRY)", file=sys.stderr)
        return 2
    Path(target).write_text(textio.registry_to_json(registry), encoding="utf-8")
    _emit(args, {"registered": args.name}, f"registered lemma {args.name}")
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    registry, _ = _load_registry(args)
    uvicorn.run(create_app(registry), host=args.host, port=args.port, log_level="warning")
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="comchase",
        description="check and synthesize commutativity of finite diagrams",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, registry=False):
        p.add_argument("--json", action="store_true", help="machine-readable stdout")
        p.add_argument("--cap", type=int, default=100_000,
                       help="safety cap for path/diagram enumeration")
        if registry:
            p.add_argument("--registry", help="lemma registry JSON path")

    p = sub.add_parser("quiver", help="inspect a quiver file")
    p.add_argument("action", choices=["check", "dual", "dot"])
    p.add_argument("file")
    add_common(p)
    p.set_defaults(fn=_cmd_quiver)

    p = sub.add_parser("commerge", help="decide commutativity from assumptions")
    p.add_argument("quiver")
    p.add_argument("--assume", action="append", help="assumption JSON file (repeatable)")
    add_common(p)
    p.set_defaults(fn=_cmd_commerge)

    p = sub.add_parser("comcut", help="synthesize sufficient commutativity conditions")
    p.add_argument("quiver")
    p.add_argument("--verify", action="store_true", help="confirm fullness with the closure oracle")
    p.add_argument("--dot", action="store_true", help="emit DOT overlays for each bipath")
    add_common(p)
    p.set_defaults(fn=_cmd_comcut)

    p = sub.add_parser("formula", help="inspect a formula file")
    p.add_argument("action", choices=["check", "dual"])
    p.add_argument("file")
    add_common(p)
    p.set_defaults(fn=_cmd_formula)

    p = sub.add_parser("eval", help="evaluate a closed formula in a finite category")
    p.add_argument("formula")
    p.add_argument("--model", required=True, help="category JSON file")
    add_common(p)
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("proof", help="check a proof script")
    p.add_argument("action", choices=["check"])
    p.add_argument("formula")
    p.add_argument("script")
    add_common(p, registry=True)
    p.set_defaults(fn=_cmd_proof)

    p = sub.add_parser("biproof", help="check a primal/dual proof pair")
    p.add_argument("action", choices=["check"])
    p.add_argument("formula")
    p.add_argument("primal")
    p.add_argument("dual")
    add_common(p, registry=True)
    p.set_defaults(fn=_cmd_biproof)

    p = sub.add_parser("lemma", help="manage the lemma registry")
    p.add_argument("action", choices=["add", "list"])
    p.add_argument("name", nargs="?")
    p.add_argument("formula", nargs="?")
    p.add_argument("script", nargs="?")
    p.add_argument("--dual", help="dual proof script path")
    add_common(p, registry=True)
    p.set_defaults(fn=_cmd_lemma)

    p = sub.add_parser("serve", help="run the interactive proof session service")
    p.add_argument("--port", type=int, default=8931)
    p.add_argument("--host", default="127.0.0.1")
    add_common(p, registry=True)
    p.set_defaults(fn=_cmd_serve)

    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    if args.command == "lemma" and args.action == "add":
        if not (args.name and args.formula and args.script):
            print("lemma add requires: name, formula file, proof script", file=sys.stderr)
            return 2
    try:
        return args.fn(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except (CycleError, IllFormedError, CapExceededError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
