"""Stateful HTTP service for interactive proof construction.

Sessions hold a target formula, the current sequent, and the tactic history;
replaying the history from the initial sequent always reproduces the current
one, and every transition goes through the same tactic application the batch
checker uses.  Sessions are in-memory; mutations within a session are
serialized by a per-session lock.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .commerge import commerge_report
from .comcut import comcut
from .errors import CycleError, IllFormedError, ParseError
from .formulas import Formula, FTRUE, formula_wf
from .kernel import (
    LemmaRegistry,
    Proof,
    Sequent,
    Tactic,
    applicable_tactics,
    apply_tactic,
    sequent_of_formula,
)
from .quiver import Quiver, to_dot
from . import textio


@dataclass
class Session:
    id: str
    target: Formula
    current: Sequent
    history: list[tuple[Tactic, Sequent]] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def status(self) -> str:
        return "closed" if self.current.goal == FTRUE else "open"

    def script(self) -> str:
        return textio.print_proof(tuple(t for t, _ in self.history))


class SessionStore:
    def __init__(self):
        self._sessions: dict[str, Session] = {}
        self._ids = itertools.count(1)
        self._lock = threading.Lock()

    def create(self, target: Formula) -> Session:
        with self._lock:
            sid = f"s{next(self._ids)}"
            session = Session(sid, target, sequent_of_formula(target))
            self._sessions[sid] = session
            return session

    def get(self, sid: str) -> Session:
        session = self._sessions.get(sid)
        if session is None:
            raise HTTPException(status_code=404, detail=f"unknown session {sid}")
        return session


class CreateSessionBody(BaseModel):
    formula: str


class TacticBody(BaseModel):
    tactic: str


class CommergeBody(BaseModel):
    quiver: dict
    assumptions: list[dict] = []


class ComcutBody(BaseModel):
    quiver: dict


def _quiver_payload(q: Quiver) -> dict:
    return {"quiver": q.to_json_dict(), "dot": to_dot(q)}


def _state_payload(session: Session, registry: LemmaRegistry) -> dict:
    s = session.current
    return {
        "id": session.id,
        "status": session.status,
        "context": [_quiver_payload(q) for q in s.context],
        "premises": [textio.print_formula(p, s.context) for p in s.premises],
        "goal": textio.print_formula(s.goal, s.context),
        "hints": applicable_tactics(s, registry),
        "steps": len(session.history),
    }


def _parse_single_tactic(text: str) -> Tactic:
    proof: Proof = textio.parse_proof(text)
    if len(proof) != 1:
        raise ParseError(f"expected exactly one tactic, found {len(proof)}")
    return proof[0]


def create_app(registry: LemmaRegistry | None = None) -> FastAPI:
    registry = registry if registry is not None else LemmaRegistry()
    store = SessionStore()
    app = FastAPI(title="comchase proof sessions")

    @app.post("/sessions")
    def create_session(body: CreateSessionBody):
        try:
            formula = textio.parse_formula(body.formula)
        except ParseError as e:
            raise HTTPException(status_code=400, detail=f"parse error: {e}")
        if not formula_wf((), formula):
            raise HTTPException(status_code=400, detail="formula is not well-formed")
        session = store.create(formula)
        return _state_payload(session, registry)

    @app.get("/sessions/{sid}")
    def get_state(sid: str):
        return _state_payload(store.get(sid), registry)

    @app.post("/sessions/{sid}/tactic")
    def post_tactic(sid: str, body: TacticBody):
        session = store.get(sid)
        try:
            tactic = _parse_single_tactic(body.tactic)
        except ParseError as e:
            raise HTTPException(status_code=400, detail=f"parse error: {e}")
        with session.lock:
            nxt = apply_tactic(tactic, session.current, registry)
            if nxt is None:
                raise HTTPException(status_code=422, detail="tactic does not apply to the current sequent")
            session.history.append((tactic, session.current))
            session.current = nxt
        return _state_payload(session, registry)

    @app.post("/sessions/{sid}/undo")
    def undo(sid: str):
        session = store.get(sid)
        with session.lock:
            if not session.history:
                raise HTTPException(status_code=409, detail="nothing to undo")
            _, previous = session.history.pop()
            session.current = previous
        return _state_payload(session, registry)

    @app.get("/sessions/{sid}/script")
    def export_script(sid: str):
        session = store.get(sid)
        return {"script": session.script(), "status": session.status}

    @app.post("/tools/commerge")
    def tool_commerge(body: CommergeBody):
        try:
            q = Quiver.from_json_dict(body.quiver)
            assms = textio.assumptions_from_json_list(body.assumptions)
            verdict, failing = commerge_report(q, assms)
        except (ParseError, CycleError, IllFormedError, KeyError, TypeError, ValueError) as e:
            raise HTTPException(status_code=400, detail=str(e))
        return {"verdict": verdict, "failing_pairs": failing}

    @app.post("/tools/comcut")
    def tool_comcut(body: ComcutBody):
        try:
            q = Quiver.from_json_dict(body.quiver)
            bipaths = comcut(q)
        except (CycleError, IllFormedError, KeyError, TypeError, ValueError) as e:
            raise HTTPException(status_code=400, detail=str(e))
        return {"bipaths": [b.to_json_dict() for b in bipaths]}

    @app.get("/lemmas")
    def lemmas():
        return {"lemmas": registry.names()}

    return app
