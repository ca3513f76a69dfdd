"""JSON-over-HTTP service for interactive play and analysis.

Sessions live in an in-memory LRU store (default cap 1024) and are safe
under concurrent access; solver work runs on a bounded worker pool. Error
codes: 400 malformed body, 404 unknown session or family, 422 invalid move
target, 409 analysis cannot complete (cap/budget/unwinnable-for-hints).
"""

from __future__ import annotations

import threading
import time
import uuid
from collections import OrderedDict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Any, Optional

import anyio
from fastapi import FastAPI, HTTPException, Request, Response
from fastapi.responses import JSONResponse

from .engine import LOWEST_INDEX, Move, MoveKind, StepLimitError, borrowing_binge, single_move
from .families import (Instance, InstanceFormatError, hybrid_example,
                       instance_from_dict, intro_example, random_instance,
                       star_example)
from .graph import Divisor, is_effective, is_stable, total_chips
from .coset import InvalidNError, lower_bound
from .solver import (BudgetError, CapExceededError, GreedyFailedError,
                     bfs_min_moves, verify_bound)

DEFAULT_SESSION_CAP = 1024
SOLVER_POOL_SIZE = 4


@dataclass
class GameSession:
    """One interactive game: instance, current divisor, and undo history."""

    id: str
    instance: Instance
    current: Divisor
    history: list[tuple[Move, Divisor]] = field(default_factory=list)
    created_at: float = field(default_factory=time.time)
    lock: threading.RLock = field(default_factory=threading.RLock)
    analytics: Optional[dict] = None
    hint_cache: dict = field(default_factory=dict)


class SessionStore:
    """Thread-safe LRU map of session id to GameSession."""

    def __init__(self, cap: int):
        self.cap = cap
        self._lock = threading.Lock()
        self._sessions: OrderedDict[str, GameSession] = OrderedDict()

    def create(self, instance: Instance) -> GameSession:
        session = GameSession(id=uuid.uuid4().hex[:12], instance=instance,
                              current=instance.divisor)
        with self._lock:
            self._sessions[session.id] = session
            while len(self._sessions) > self.cap:
                self._sessions.popitem(last=False)
        return session

    def get(self, sid: str) -> GameSession:
        with self._lock:
            session = self._sessions.get(sid)
            if session is None:
                raise HTTPException(status_code=404, detail=f"unknown game id {sid!r}")
            self._sessions.move_to_end(sid)
            return session


async def _parse_body(request: Request) -> Any:
    try:
        return await request.json()
    except Exception:
        raise HTTPException(status_code=400, detail="body is not valid JSON")


def _initial_analytics(session: GameSession) -> dict:
    """Greedy move count and bound for the starting divisor (dollar side)."""
    if session.analytics is not None:
        return session.analytics
    g = session.instance.graph
    c = session.instance.divisor
    m0: Optional[int] = None
    bound: Optional[dict] = None
    if g.num_vertices >= 2 and total_chips(c) >= 0:
        try:
            trace = borrowing_binge(g, c, keep_states=False)
            if trace.status == "won":
                m0 = trace.move_count
                frac, _ = lower_bound(m0, g.num_vertices)
                bound = {"num": frac.numerator, "den": frac.denominator}
        except StepLimitError:
            pass
    session.analytics = {"m0": m0, "bound": bound}
    return session.analytics


def _state_payload(session: GameSession) -> dict:
    with session.lock:
        analytics = _initial_analytics(session)
        return {
            "id": session.id,
            "state": list(session.current),
            "move_count": len(session.history),
            "is_effective": is_effective(session.current),
            "is_stable": is_stable(session.instance.graph, session.current),
            "m0": analytics["m0"],
            "bound": analytics["bound"],
            "instance": session.instance.to_dict(),
        }


_MISS = object()


def _greedy_hint(g, c: Divisor) -> Optional[dict]:
    debtors = [i for i in range(g.num_vertices) if c[i] < 0]
    if not debtors:
        return None
    v = debtors[0]
    remaining: Optional[int] = None
    if total_chips(c) >= 0:
        try:
            trace = borrowing_binge(g, c, LOWEST_INDEX, keep_states=False)
            if trace.status == "won":
                remaining = trace.move_count
        except StepLimitError:
            pass
    return {
        "vertex": v,
        "kind": "borrow",
        "rationale": f"vertex {v} is in debt ({c[v]}); greedy play borrows there",
        "remaining_estimate": remaining,
    }


def _optimal_hint(g, c: Divisor) -> Optional[dict]:
    if is_effective(c):
        return None
    if total_chips(c) < 0:
        raise HTTPException(status_code=409, detail="no optimal hint: game is unwinnable")
    try:
        trace = borrowing_binge(g, c, LOWEST_INDEX, keep_states=False)
    except StepLimitError:
        raise HTTPException(status_code=409, detail="analysis cap exceeded")
    if trace.status != "won":
        raise HTTPException(status_code=409, detail="no optimal hint: game is unwinnable")
    try:
        res = bfs_min_moves(g, c, "effective", radius_cap=max(trace.move_count, 1))
    except CapExceededError:
        raise HTTPException(status_code=409, detail="analysis cap exceeded")
    first = res.moves[0]
    return {
        "vertex": first.vertex,
        "kind": first.kind.value,
        "rationale": f"an optimal line wins in {res.m_min} move(s); "
                     f"start with a {first.kind.value} at vertex {first.vertex}",
        "remaining_estimate": res.m_min,
    }


def create_app(static_dir: Optional[str] = None,
               session_cap: int = DEFAULT_SESSION_CAP) -> FastAPI:
    """Build the service; state is local to the returned app."""
    app = FastAPI(title="dollargame", version="0.1.0")
    store = SessionStore(session_cap)
    solver_pool = threading.BoundedSemaphore(SOLVER_POOL_SIZE)

    def pooled(fn, *args, **kwargs):
        with solver_pool:
            return fn(*args, **kwargs)

    @app.post("/api/games")
    async def create_game(request: Request) -> JSONResponse:
        body = await _parse_body(request)
        if not isinstance(body, dict) or "instance" not in body:
            raise HTTPException(status_code=400, detail="body must be {\"instance\": ...}")
        try:
            instance = instance_from_dict(body["instance"])
        except InstanceFormatError as exc:
            raise HTTPException(status_code=400, detail=f"instance.{exc}")
        session = store.create(instance)
        return JSONResponse({"id": session.id, "state": list(session.current)})

    @app.get("/api/games/{sid}")
    async def get_game(sid: str) -> dict:
        return _state_payload(store.get(sid))

    @app.post("/api/games/{sid}/moves")
    async def post_move(sid: str, request: Request) -> dict:
        session = store.get(sid)
        body = await _parse_body(request)
        if not isinstance(body, dict):
            raise HTTPException(status_code=400, detail="body must be an object")
        vertex = body.get("vertex")
        kind = body.get("kind")
        if isinstance(vertex, bool) or not isinstance(vertex, int) or not isinstance(kind, str):
            raise HTTPException(status_code=400,
                                detail="body must be {\"vertex\": int, \"kind\": str}")
        n = session.instance.graph.num_vertices
        if not 0 <= vertex < n:
            raise HTTPException(status_code=422,
                                detail=f"vertex {vertex} outside 0..{n - 1}")
        if kind not in (MoveKind.LEND.value, MoveKind.BORROW.value):
            raise HTTPException(status_code=422, detail=f"unknown move kind {kind!r}")
        move = Move(vertex, MoveKind(kind))
        with session.lock:
            prev = session.current
            session.current = single_move(session.instance.graph, prev, move)
            session.history.append((move, prev))
        return _state_payload(session)

    @app.post("/api/games/{sid}/undo")
    async def post_undo(sid: str) -> dict:
        session = store.get(sid)
        with session.lock:
            if not session.history:
                raise HTTPException(status_code=422, detail="nothing to undo")
            _, prev = session.history.pop()
            session.current = prev
        return _state_payload(session)

    @app.get("/api/games/{sid}/hint")
    async def get_hint(sid: str, strategy: str = "greedy") -> Response:
        if strategy not in ("greedy", "optimal"):
            raise HTTPException(status_code=400,
                                detail=f"strategy must be 'greedy' or 'optimal', got {strategy!r}")
        session = store.get(sid)
        with session.lock:
            state = session.current
        # compute outside the session lock so concurrent moves never stall
        key = (state, strategy)
        hint = session.hint_cache.get(key, _MISS)
        if hint is _MISS:
            fn = _greedy_hint if strategy == "greedy" else _optimal_hint
            hint = await anyio.to_thread.run_sync(
                partial(pooled, fn, session.instance.graph, state))
            session.hint_cache[key] = hint
        if hint is None:
            return Response(status_code=204)
        return JSONResponse(hint)

    @app.post("/api/analyze")
    async def analyze(request: Request) -> dict:
        body = await _parse_body(request)
        if not isinstance(body, dict) or "instance" not in body:
            raise HTTPException(status_code=400, detail="body must be {\"instance\": ...}")
        side = body.get("side", "dollar")
        method = body.get("method", "auto")
        try:
            instance = instance_from_dict(body["instance"])
        except InstanceFormatError as exc:
            raise HTTPException(status_code=400, detail=f"instance.{exc}")
        try:
            report = await anyio.to_thread.run_sync(
                partial(pooled, verify_bound, instance.graph, instance.divisor,
                        side=side, method=method))
        except (ValueError, InvalidNError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        except (CapExceededError, BudgetError, StepLimitError, GreedyFailedError) as exc:
            raise HTTPException(status_code=409, detail=f"analysis cap exceeded: {exc}")
        return report.to_dict()

    @app.get("/api/families/{name}")
    async def get_family(name: str, n: int = 5, k: int = 1, p: float = 0.5,
                         lo: int = -3, hi: int = 3, seed: int = 0) -> dict:
        try:
            if name == "intro":
                instance = intro_example()
            elif name == "star":
                instance = star_example(n, k)
            elif name == "hybrid":
                instance = hybrid_example(n, k)
            elif name == "random":
                instance = random_instance(n, p, (lo, hi), seed)
            else:
                raise HTTPException(status_code=404, detail=f"unknown family {name!r}")
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return instance.to_dict()

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app
