"""HTTP service: instrument catalog, exercises, grading, stats, and pages.

State lives in memory and is reconstructed at startup by replaying the
event log; every mutation appends its event before the in-memory apply.
Error responses all share one shape, ``{"code": ..., "message": ...}``,
with the code fixed per error class.
"""

from __future__ import annotations

import logging
import os
import secrets
import threading
import time
from pathlib import Path
from typing import Any

from fastapi import APIRouter, FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import HTMLResponse, JSONResponse, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel
from starlette.exceptions import HTTPException as StarletteHTTPException

from vmlab import documents, pages
from vmlab.engine import (
    AlreadyAnsweredError,
    AttemptRecord,
    Exercise,
    Session,
    SplitMix64,
    evaluate_answer,
    new_exercise,
    new_id,
    session_stats,
)
from vmlab.eventlog import EventLog
from vmlab.model import (
    InstrumentKind,
    InstrumentSpec,
    LabError,
    MalformedAnswerError,
    OutOfRangeError,
    TickPosition,
    default_spec,
    parse_answer,
)

log = logging.getLogger("vmlab.service")

DATA_DIR_ENV = "VMLAB_DATA_DIR"
DEFAULT_DATA_DIR = "vmlab-data"


class NotFoundError(LabError):
    """Unknown session, exercise, or instrument kind."""


# Error class -> (code, HTTP status).  Order matters: first match wins.
_ERROR_MAP: list[tuple[type[LabError], str, int]] = [
    (MalformedAnswerError, "malformed_input", 422),
    (NotFoundError, "not_found", 404),
    (AlreadyAnsweredError, "already_answered", 409),
    (OutOfRangeError, "out_of_range", 422),
]


def classify_error(exc: Exception) -> tuple[str, int]:
    for klass, code, status in _ERROR_MAP:
        if isinstance(exc, klass):
            return code, status
    return "internal", 500


class LabService:
    """In-memory lab state, rebuilt from the event log on startup."""

    def __init__(self, data_dir: str | Path, seed: int | None = None) -> None:
        self.log = EventLog(data_dir)
        self.sessions: dict[str, Session] = {}
        self.exercises: dict[str, Exercise] = {}
        self.exercise_owner: dict[str, str] = {}
        self.last_target: dict[tuple[str, InstrumentKind], TickPosition] = {}
        self.issue_count = 0
        self.rng = SplitMix64(0)
        self.lock = threading.Lock()
        self._replay(seed)

    # -- replay ----------------------------------------------------------

    def _replay(self, requested_seed: int | None) -> None:
        stored_seed: int | None = None
        for record in self.log.replay():
            payload = record.payload
            if record.kind == "server_seeded":
                stored_seed = payload["seed"]
                self.rng = SplitMix64(stored_seed)
            elif record.kind == "session_created":
                assert record.session_id is not None
                self.sessions[record.session_id] = Session(
                    id=record.session_id, created_at=record.at
                )
            elif record.kind == "exercise_issued":
                assert record.session_id is not None
                exercise = Exercise(
                    id=payload["exercise_id"],
                    kind=InstrumentKind(payload["kind"]),
                    target=payload["target"],
                    seed_index=payload["seed_index"],
                )
                self.exercises[exercise.id] = exercise
                self.exercise_owner[exercise.id] = record.session_id
                self.last_target[(record.session_id, exercise.kind)] = exercise.target
                self.rng.state = payload["rng_state"]
                self.issue_count = payload["seed_index"] + 1
            elif record.kind == "attempt_graded":
                assert record.session_id is not None
                exercise = self.exercises[payload["exercise_id"]]
                exercise.answered = True
                self.sessions[record.session_id].attempts.append(
                    AttemptRecord(
                        exercise_id=exercise.id,
                        kind=exercise.kind,
                        answer_raw=payload["answer_raw"],
                        verdict=payload["verdict"],
                        at=record.at,
                    )
                )
            else:
                log.warning("ignoring unknown event kind %r", record.kind)
        if stored_seed is None:
            seed = requested_seed if requested_seed is not None else secrets.randbits(64)
            self.rng = SplitMix64(seed)
            self.log.append("server_seeded", None, {"seed": seed})
        elif requested_seed is not None and requested_seed != stored_seed:
            log.warning(
                "data dir already seeded; keeping the stored seed and generator state"
            )

    # -- lookups ---------------------------------------------------------

    def _session(self, session_id: str) -> Session:
        try:
            return self.sessions[session_id]
        except KeyError:
            raise NotFoundError(f"unknown session: {session_id}") from None

    def _exercise(self, session_id: str, exercise_id: str) -> Exercise:
        self._session(session_id)
        exercise = self.exercises.get(exercise_id)
        if exercise is None or self.exercise_owner.get(exercise_id) != session_id:
            raise NotFoundError(f"unknown exercise: {exercise_id}")
        return exercise

    # -- mutations -------------------------------------------------------

    def create_session(self) -> Session:
        with self.lock:
            session = Session(id=new_id(), created_at=time.time())
            self.log.append("session_created", session.id, {}, at=session.created_at)
            self.sessions[session.id] = session
            return session

    def issue_exercise(self, session_id: str, kind: InstrumentKind) -> Exercise:
        with self.lock:
            self._session(session_id)
            spec = default_spec(kind)
            previous = self.last_target.get((session_id, kind))
            seed_index = self.issue_count
            exercise = new_exercise(self.rng, spec, previous, seed_index)
            self.log.append(
                "exercise_issued",
                session_id,
                {
                    "exercise_id": exercise.id,
                    "kind": kind.value,
                    "target": exercise.target,
                    "seed_index": seed_index,
                    "rng_state": self.rng.state,
                },
            )
            self.exercises[exercise.id] = exercise
            self.exercise_owner[exercise.id] = session_id
            self.last_target[(session_id, kind)] = exercise.target
            self.issue_count = seed_index + 1
            return exercise

    def submit_answer(self, session_id: str, exercise_id: str, text: str) -> Any:
        with self.lock:
            session = self._session(session_id)
            exercise = self._exercise(session_id, exercise_id)
            spec = default_spec(exercise.kind)
            if exercise.answered:
                raise AlreadyAnsweredError(f"exercise {exercise_id} is already answered")
            result = evaluate_answer(spec, exercise.target, text)  # malformed raises here
            at = time.time()
            self.log.append(
                "attempt_graded",
                session_id,
                {
                    "exercise_id": exercise_id,
                    "kind": exercise.kind.value,
                    "answer_raw": text,
                    "verdict": result.verdict,
                },
                at=at,
            )
            exercise.answered = True
            session.attempts.append(
                AttemptRecord(
                    exercise_id=exercise_id,
                    kind=exercise.kind,
                    answer_raw=text,
                    verdict=result.verdict,
                    at=at,
                )
            )
            return result

    def stats(self, session_id: str) -> Any:
        return session_stats(self._session(session_id))


def _kind_or_404(token: str) -> InstrumentKind:
    try:
        return InstrumentKind(token)
    except ValueError:
        raise NotFoundError(f"unknown instrument: {token}") from None


def _stats_doc(session_id: str, stats: Any) -> dict[str, Any]:
    def block(s: Any) -> dict[str, Any]:
        return {"attempts": s.attempts, "correct": s.correct, "accuracy": s.accuracy}

    return {
        "session_id": session_id,
        "overall": block(stats.overall),
        "per_kind": {kind.value: block(s) for kind, s in stats.per_kind.items()},
    }


class IssueBody(BaseModel):
    kind: str


class AnswerBody(BaseModel):
    text: str


def resolve_data_dir(cli_value: str | None = None) -> Path:
    """--data-dir beats VMLAB_DATA_DIR beats ./vmlab-data."""
    if cli_value is not None:
        return Path(cli_value)
    env = os.environ.get(DATA_DIR_ENV)
    if env:
        return Path(env)
    return Path(DEFAULT_DATA_DIR)


def create_app(data_dir: str | Path | None = None, seed: int | None = None) -> FastAPI:
    service = LabService(resolve_data_dir(None if data_dir is None else str(data_dir)), seed)
    app = FastAPI(title="Virtual Metrology Lab", docs_url=None, redoc_url=None)
    app.state.lab = service
    api = APIRouter(prefix="/api/v1")

    @app.exception_handler(LabError)
    async def lab_error_handler(request: Request, exc: LabError) -> JSONResponse:
        code, status = classify_error(exc)
        return JSONResponse({"code": code, "message": str(exc)}, status_code=status)

    @app.exception_handler(RequestValidationError)
    async def validation_handler(
        request: Request, exc: RequestValidationError
    ) -> JSONResponse:
        return JSONResponse(
            {"code": "malformed_input", "message": "request body failed validation"},
            status_code=422,
        )

    @app.exception_handler(StarletteHTTPException)
    async def http_error_handler(
        request: Request, exc: StarletteHTTPException
    ) -> JSONResponse:
        code = "not_found" if exc.status_code == 404 else "internal"
        return JSONResponse(
            {"code": code, "message": str(exc.detail)}, status_code=exc.status_code
        )

    @app.exception_handler(Exception)
    async def fallback_handler(request: Request, exc: Exception) -> JSONResponse:
        log.exception("unhandled error serving %s", request.url.path)
        return JSONResponse(
            {"code": "internal", "message": "internal error"}, status_code=500
        )

    # -- API -------------------------------------------------------------

    @api.post("/sessions")
    def create_session() -> dict[str, str]:
        session = service.create_session()
        return {"session_id": session.id}

    @api.get("/instruments")
    def instrument_catalog() -> list[dict[str, Any]]:
        return documents.catalog_doc()

    @api.get("/instruments/{kind}/template")
    def instrument_template(kind: str, request: Request) -> Response:
        resolved = _kind_or_404(kind)
        etag = documents.template_etag(resolved)
        if request.headers.get("if-none-match") == etag:
            return Response(status_code=304, headers={"ETag": etag})
        return Response(
            content=documents.template_bytes(resolved),
            media_type="application/json",
            headers={"ETag": etag, "Cache-Control": "public, max-age=3600"},
        )

    @api.get("/instruments/{kind}/reading")
    def instrument_reading(kind: str, ticks: str | None = None) -> dict[str, Any]:
        resolved = _kind_or_404(kind)
        if ticks is None:
            raise MalformedAnswerError("missing required query parameter: ticks")
        try:
            position = int(ticks)
        except ValueError:
            raise MalformedAnswerError(f"ticks must be an integer, got {ticks!r}") from None
        return documents.reading_doc(default_spec(resolved), position)

    @api.post("/sessions/{session_id}/exercises")
    def issue_exercise(session_id: str, body: IssueBody) -> dict[str, Any]:
        kind = _kind_or_404(body.kind)
        exercise = service.issue_exercise(session_id, kind)
        spec = default_spec(kind)
        return {
            "exercise_id": exercise.id,
            "kind": kind.value,
            "transform": documents.pose_doc(spec, exercise.target),
        }

    @api.post("/sessions/{session_id}/exercises/{exercise_id}/answer")
    def submit_answer(session_id: str, exercise_id: str, body: AnswerBody) -> dict[str, Any]:
        result = service.submit_answer(session_id, exercise_id, body.text)
        doc: dict[str, Any] = {"verdict": result.verdict, "message": result.message}
        if result.correct_value is not None:
            doc["correct_value"] = result.correct_value
        return doc

    @api.get("/sessions/{session_id}/stats")
    def get_stats(session_id: str) -> dict[str, Any]:
        return _stats_doc(session_id, service.stats(session_id))

    app.include_router(api)

    # -- pages -----------------------------------------------------------

    @app.get("/", response_class=HTMLResponse)
    def home() -> str:
        return pages.home_page()

    @app.get("/safety", response_class=HTMLResponse)
    def safety() -> str:
        return pages.safety_page()

    @app.get("/lab/{kind}", response_class=HTMLResponse)
    def lab(kind: str) -> str:
        return pages.lab_page(_kind_or_404(kind))

    static_dir = Path(__file__).parent / "static"
    app.mount("/static", StaticFiles(directory=str(static_dir)), name="static")

    return app
