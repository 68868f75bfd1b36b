"""HTTP session service for the expert-knowledge loop.

Sessions are in-memory: a base graph, the accepted pieces, the current
graph (always equal to refolding the accepted pieces into the base)
and an undo stack. All computation delegates to the pure modules;
requests to one session are serialized by a per-session lock.
"""

import threading
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from .essential import (
    add_bg_knowledge,
    admissibility_issue,
    parse_knowledge,
    verify_completeness,
)
from .graph import CIRC, GraphError, parse_pmg, render_pmg
from .oracle import ENUM_EDGE_CAP, enumerate_mags, piece_holds
from .essential import mag_to_essential

PIECE_TOKENS = ("-->", "<--", "*->", "<-*")


class ApiError(Exception):
    def __init__(self, status, error, detail):
        self.status = status
        self.error = error
        self.detail = detail
        super().__init__(detail)


class CreateBody(BaseModel):
    graph: str


class PieceBody(BaseModel):
    piece: str


@dataclass
class Session:
    id: str
    base: object
    current: object
    accepted: list = field(default_factory=list)
    undo_stack: list = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)


SESSIONS = {}
_REGISTRY_LOCK = threading.Lock()

app = FastAPI(title="ancestral-sessions")

# the browser client is served as static files from another origin
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_methods=["*"],
    allow_headers=["*"],
)


@app.exception_handler(ApiError)
async def _api_error(request, exc):
    return JSONResponse(
        status_code=exc.status,
        content={"error": exc.error, "detail": exc.detail},
    )


def _get_session(sid):
    with _REGISTRY_LOCK:
        sess = SESSIONS.get(sid)
    if sess is None:
        raise ApiError(404, "unknown session", "no session %s" % sid)
    return sess


def _parse_piece(sess, text):
    try:
        pieces = parse_knowledge(text, sess.current)
    except GraphError as e:
        raise ApiError(422, "unparseable piece", str(e))
    if len(pieces) != 1:
        raise ApiError(
            422, "unparseable piece", "expected exactly one piece line"
        )
    return pieces[0]


def _admissible(g):
    """Per variant-mark edge, which piece forms the marks permit."""
    out = []
    for x, y in g.edges():
        if g.mark(x, y) != CIRC and g.mark(y, x) != CIRC:
            continue
        forms = {}
        for tok in PIECE_TOKENS:
            piece = parse_knowledge("%s %s %s" % (x, tok, y), g)[0]
            issue = admissibility_issue(g, piece)
            forms[tok] = {"ok": issue is None, "reason": issue}
        out.append({"x": x, "y": y, "forms": forms})
    return out


def _state(sess):
    return {
        "id": sess.id,
        "graph": render_pmg(sess.current),
        "accepted": [str(k) for k in sess.accepted],
        "admissible": _admissible(sess.current),
        "canUndo": bool(sess.undo_stack),
    }


@app.post("/sessions")
def create_session(body: CreateBody):
    try:
        g = parse_pmg(body.graph)
    except GraphError as e:
        raise ApiError(422, "unparseable graph", str(e))
    sid = uuid.uuid4().hex[:12]
    sess = Session(id=sid, base=g, current=g)
    with _REGISTRY_LOCK:
        SESSIONS[sid] = sess
    return _state(sess)


@app.get("/sessions/{sid}")
def get_session(sid: str):
    sess = _get_session(sid)
    with sess.lock:
        return _state(sess)


def _fold(sess, piece):
    res = add_bg_knowledge(sess.current, [piece])
    if not res.ok:
        raise ApiError(409, "inadmissible piece", res.reason)
    return res


@app.post("/sessions/{sid}/knowledge")
def add_knowledge(sid: str, body: PieceBody):
    sess = _get_session(sid)
    with sess.lock:
        piece = _parse_piece(sess, body.piece)
        res = _fold(sess, piece)
        sess.undo_stack.append((piece, sess.current))
        sess.current = res.graph
        sess.accepted.append(piece)
        out = _state(sess)
        out["trace"] = [c.as_dict() for c in res.trace]
        return out


@app.post("/sessions/{sid}/whatif")
def what_if(sid: str, body: PieceBody):
    sess = _get_session(sid)
    with sess.lock:
        piece = _parse_piece(sess, body.piece)
        res = _fold(sess, piece)
        preview = {
            "id": sess.id,
            "graph": render_pmg(res.graph),
            "accepted": [str(k) for k in sess.accepted + [piece]],
            "admissible": _admissible(res.graph),
            "canUndo": bool(sess.undo_stack),
            "trace": [c.as_dict() for c in res.trace],
        }
        return preview


@app.post("/sessions/{sid}/undo")
def undo(sid: str):
    sess = _get_session(sid)
    with sess.lock:
        if not sess.undo_stack:
            raise ApiError(409, "nothing to undo", "undo stack is empty")
        piece, before = sess.undo_stack.pop()
        sess.current = before
        sess.accepted.pop()
        return _state(sess)


@app.get("/sessions/{sid}/mec")
def mec_size(sid: str, restrict: bool = False):
    sess = _get_session(sid)
    with sess.lock:
        if len(sess.base.edges()) > ENUM_EDGE_CAP:
            raise ApiError(
                413,
                "class too large",
                "enumeration is capped at %d edges" % ENUM_EDGE_CAP,
            )
        members = [
            m
            for m in enumerate_mags(sess.base)
            if mag_to_essential(m) == sess.base
        ]
        if restrict:
            members = [
                m
                for m in members
                if all(piece_holds(m, k) for k in sess.accepted)
            ]
        return {"size": len(members), "restricted": restrict}


@app.post("/sessions/{sid}/verify")
def verify(sid: str):
    sess = _get_session(sid)
    with sess.lock:
        verdict, report = verify_completeness(
            sess.base, sess.current, sess.accepted, with_report=True
        )
        return {"verdict": verdict, "report": report}
