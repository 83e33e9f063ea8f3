"""Session-based HTTP workbench.

Sessions live in memory only; state is an initial graph plus the stack
of applied moves, so every response is a pure function of the session
history.  One writer per session (moves and undo are serialized by a
per-session lock); reads are unrestricted.
"""

import threading
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import core, generators, spgjson, strategy
from .checks import MAIN_PROPERTIES, property_report
from .errors import BadEdge, BadParameter, EdgeExists, NoSuchEdge, SelfLoop, SpgError

_CONFLICT_ERRORS = (NoSuchEdge, EdgeExists, SelfLoop, BadEdge)


class SourceBody(BaseModel):
    kind: str  # "upload" | "generator"
    document: dict | None = None
    name: str | None = None
    params: dict = {}


class CreateSessionBody(BaseModel):
    source: SourceBody


class MoveBody(BaseModel):
    kind: str  # "contract" | "addEdge"
    endpoints: tuple[int, int]


@dataclass
class Session:
    id: str
    initial: core.Spg
    entries: list = field(default_factory=list)  # [(Move, Spg)]
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def current(self) -> core.Spg:
        return self.entries[-1][1] if self.entries else self.initial


def _generate(name: str, params: dict) -> core.Spg:
    try:
        if name == "spindle":
            return generators.gen_spindle_family(int(params["m"]))
        if name == "cyclic":
            return generators.gen_cyclic_construction(int(params["n"]), int(params["d"]))
        if name == "cube":
            return generators.gen_cube_spg(int(params["dim"]))
        if name == "hirsch-path":
            return core.clf_to_spg(
                generators.gen_hirsch_path_clf(int(params["n"]), int(params["d"])))
        if name == "figure1":
            return generators.gen_figure1()
    except (KeyError, TypeError) as err:
        raise BadParameter(f"generator {name!r} is missing a parameter: {err}") from err
    raise BadParameter(f"unknown generator {name!r}")


def _state_payload(session: Session) -> dict:
    g = session.current
    dia = core.diameter(g)
    return {
        "id": session.id,
        "graph": spgjson.spg_to_document(g),
        "report": spgjson.report_to_document(
            property_report(g), g.symbols.n, g.d)["properties"],
        "diameter": {"value": dia.value, "farthestPair": list(dia.farthest_pair)},
    }


def create_app() -> FastAPI:
    app = FastAPI(title="spglab workbench", version="0.1.0")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )
    sessions: dict[str, Session] = {}
    registry_lock = threading.Lock()

    @app.exception_handler(RequestValidationError)
    async def malformed_body(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    def error_payload(err: SpgError) -> dict:
        return {"detail": {"error": type(err).__name__, "message": str(err)}}

    class UnknownSession(Exception):
        pass

    def get_session(session_id: str) -> Session:
        session = sessions.get(session_id)
        if session is None:
            raise UnknownSession(session_id)
        return session

    @app.exception_handler(UnknownSession)
    async def unknown_session(request: Request, exc: UnknownSession):
        return JSONResponse(status_code=404,
                            content={"detail": f"unknown session {exc}"})

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.post("/sessions", status_code=201)
    def create_session(body: CreateSessionBody):
        source = body.source
        try:
            if source.kind == "generator":
                if not source.name:
                    raise BadParameter("generator source needs a name")
                g = _generate(source.name, source.params or {})
            elif source.kind == "upload":
                if source.document is None:
                    raise BadParameter("upload source needs a document")
                obj = spgjson.parse(source.document)
                g = core.clf_to_spg(obj) if isinstance(
                    obj, core.ConnectedLayerFamily) else obj
            else:
                raise BadParameter(f"unknown source kind {source.kind!r}")
        except SpgError as err:
            return JSONResponse(status_code=400, content=error_payload(err))
        session = Session(uuid.uuid4().hex, g)
        with registry_lock:
            sessions[session.id] = session
        return _state_payload(session)

    @app.get("/sessions/{session_id}")
    def read_session(session_id: str):
        return _state_payload(get_session(session_id))

    @app.post("/sessions/{session_id}/moves")
    def apply_move(session_id: str, body: MoveBody):
        session = get_session(session_id)
        with session.lock:
            try:
                move = strategy.Move(body.kind, tuple(body.endpoints))
                after = strategy.apply_move(session.current, move)
            except _CONFLICT_ERRORS as err:
                return JSONResponse(status_code=409, content=error_payload(err))
            except SpgError as err:
                return JSONResponse(status_code=400, content=error_payload(err))
            session.entries.append((move, after))
        return _state_payload(session)

    @app.post("/sessions/{session_id}/undo")
    def undo(session_id: str):
        session = get_session(session_id)
        with session.lock:
            if not session.entries:
                return JSONResponse(status_code=409, content=error_payload(
                    SpgError("nothing to undo")))
            session.entries.pop()
        return _state_payload(session)

    @app.get("/sessions/{session_id}/restrict")
    def restrict(session_id: str, face: str = ""):
        session = get_session(session_id)
        try:
            symbols = tuple(int(x) for x in face.split(",")) if face else ()
        except ValueError:
            return JSONResponse(status_code=400, content={
                "detail": f"face must be comma-separated integers, got {face!r}"})
        try:
            view = core.restriction(session.current, symbols)
        except SpgError as err:
            return JSONResponse(status_code=400, content=error_payload(err))
        return {
            "face": list(view.face),
            "survivingBlocks": list(view.surviving_blocks),
            "inducedEdges": [list(e) for e in view.induced_edges],
            "components": [list(c) for c in view.components],
            "connected": view.connected,
        }

    @app.get("/sessions/{session_id}/suggestions")
    def suggestions(session_id: str, targets: str = ""):
        session = get_session(session_id)
        wanted = tuple(t.strip() for t in targets.split(",") if t.strip()) \
            or MAIN_PROPERTIES
        g = session.current
        try:
            viols = strategy.violations(g, wanted)
        except SpgError as err:
            return JSONResponse(status_code=400, content=error_payload(err))
        out = []
        for prop, witness in viols:
            scored = strategy.scored_candidate_moves(g, (prop, witness))
            if not scored:
                continue
            for move, dia in scored:
                entry = spgjson.move_to_document(move)
                entry["diameter"] = dia
                entry["property"] = prop
                out.append(entry)
            break
        return {"suggestions": out}

    @app.get("/sessions/{session_id}/trace")
    def trace(session_id: str):
        session = get_session(session_id)
        with session.lock:
            steps = tuple(
                strategy.TraceStep(move, core.diameter(state).value,
                                   property_report(state))
                for move, state in session.entries
            )
            doc = spgjson.trace_to_document(strategy.StrategyTrace(
                session.initial, steps, session.current, ()))
        return doc

    return app


app = create_app()
