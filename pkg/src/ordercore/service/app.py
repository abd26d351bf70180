"""FastAPI application: session management plus edge updates and queries.

Each session owns one graph and one maintenance engine.  The engines are
strictly single-writer, so every session carries a lock and updates within a
session are serialized; different sessions proceed independently.

Vertex ids in requests and responses are external ids; the service keeps the
external-to-internal mapping per session.
"""

import threading
import uuid

from fastapi import FastAPI, HTTPException

from ..decomp import validate_korder
from ..errors import DuplicateEdge, MissingEdge, OrderCoreError, SelfLoop
from ..graph import load_edge_list
from ..order_engine import OrderEngine
from ..workload import make_engine
from .schemas import (
    CoreResponse,
    EdgeUpdate,
    SessionCreate,
    SessionInfo,
    UpdateResponse,
    ValidateResponse,
    VertexCoreResponse,
)


class Session:
    def __init__(self, sid, engine_name, engine, report):
        self.sid = sid
        self.engine_name = engine_name
        self.engine = engine
        self.report = report  # holds the external<->internal id mapping
        self.lock = threading.Lock()

    def info(self):
        return SessionInfo(
            session_id=self.sid,
            engine=self.engine_name,
            n=self.engine.g.n,
            m=self.engine.g.m,
            max_core=max(self.engine.cores(), default=0),
        )


def create_app() -> FastAPI:
    app = FastAPI(title="ordercore", version="0.1.0")
    sessions: dict[str, Session] = {}
    registry_lock = threading.Lock()

    def get_session(sid) -> Session:
        session = sessions.get(sid)
        if session is None:
            raise HTTPException(status_code=404, detail=f"no session {sid}")
        return session

    @app.post("/sessions", response_model=SessionInfo, status_code=201)
    def create_session(req: SessionCreate):
        if req.edge_text is not None:
            lines = req.edge_text.splitlines()
        else:
            lines = [f"{u} {v}" for u, v in (req.edges or [])]
        try:
            report = load_edge_list(lines)
        except OrderCoreError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        engine = make_engine(req.engine, report.graph, heuristic=req.heuristic, seed=req.seed)
        sid = uuid.uuid4().hex[:12]
        session = Session(sid, req.engine, engine, report)
        with registry_lock:
            sessions[sid] = session
        return session.info()

    @app.get("/sessions/{sid}", response_model=SessionInfo)
    def session_info(sid: str):
        return get_session(sid).info()

    @app.delete("/sessions/{sid}", status_code=204)
    def delete_session(sid: str):
        with registry_lock:
            if sessions.pop(sid, None) is None:
                raise HTTPException(status_code=404, detail=f"no session {sid}")

    def run_update(session, u, v, direction):
        with session.lock:
            iu = session.report.intern(u)
            iv = session.report.intern(v)
            try:
                if direction == "insert":
                    result = session.engine.insert(iu, iv)
                else:
                    result = session.engine.remove(iu, iv)
            except SelfLoop as exc:
                raise HTTPException(status_code=400, detail=str(exc))
            except (DuplicateEdge, MissingEdge) as exc:
                raise HTTPException(status_code=409, detail=str(exc))
            ext = session.report.external_ids
            return UpdateResponse(
                direction=result.direction,
                k=result.k,
                vstar=[ext[x] for x in result.vstar],
                vstar_size=result.vstar_size,
                visited_size=result.visited_size,
                elapsed_micros=result.elapsed_micros,
            )

    @app.post("/sessions/{sid}/edges", response_model=UpdateResponse)
    def insert_edge(sid: str, edge: EdgeUpdate):
        return run_update(get_session(sid), edge.u, edge.v, "insert")

    @app.delete("/sessions/{sid}/edges/{u}/{v}", response_model=UpdateResponse)
    def remove_edge(sid: str, u: int, v: int):
        session = get_session(sid)
        if u not in session.report.id_map or v not in session.report.id_map:
            raise HTTPException(status_code=404, detail=f"unknown vertex in ({u}, {v})")
        return run_update(session, u, v, "remove")

    @app.get("/sessions/{sid}/cores", response_model=CoreResponse)
    def all_cores(sid: str):
        session = get_session(sid)
        with session.lock:
            cores = session.engine.cores()
            ext = session.report.external_ids
            return CoreResponse(cores={ext[i]: c for i, c in enumerate(cores)})

    @app.get("/sessions/{sid}/cores/{vertex}", response_model=VertexCoreResponse)
    def vertex_core(sid: str, vertex: int):
        session = get_session(sid)
        with session.lock:
            iid = session.report.id_map.get(vertex)
            if iid is None:
                raise HTTPException(status_code=404, detail=f"unknown vertex {vertex}")
            return VertexCoreResponse(vertex=vertex, core=session.engine.core_of(iid))

    @app.get("/sessions/{sid}/validate", response_model=ValidateResponse)
    def validate(sid: str):
        session = get_session(sid)
        with session.lock:
            engine = session.engine
            if isinstance(engine, OrderEngine):
                ok, detail = validate_korder(engine.g, engine.state, engine.order)
                return ValidateResponse(ok=ok, detail=detail)
            from ..oracle import naive_cores

            truth = naive_cores(engine.g)
            ok = engine.cores() == truth
            return ValidateResponse(ok=ok, detail="" if ok else "cores diverged")

    return app


app = create_app()
