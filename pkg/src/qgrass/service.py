"""Session-oriented HTTP/JSON service.

Sessions live in memory; each holds a current seed plus a bounded undo
stack of previous seeds (seeds are immutable, so stacking them is cheap
structural sharing).  Mutations on one session are serialised by a
per-session lock; distinct sessions never interact.  If the
QGRASS_SNAPSHOT_DIR environment variable is set, the current seed of a
session is written there as JSON after every state change.

Routes:
  POST /sessions {m, n}                      -> 201 {id, seed}
  GET  /sessions/{id}                        -> 200 {seed, arrows, mutablePositions}
  POST /sessions/{id}/mutate {position}      -> 200 {seed, geometricExchange, newLabel?}
  POST /sessions/{id}/undo                   -> 200 {seed} | 409 when empty
  GET  /sessions/{id}/variables/{position}   -> 200 serialized torus element
  GET  /sessions/{id}/quasicommutation?a=&b= -> 200 {lambda}

Errors: 404 unknown session/position, 422 frozen position, 409 undo
underflow.  Positions are 1-based on the wire.
"""

from __future__ import annotations

import json
import os
import re
import threading
import time
import uuid
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from .builder import arrows_from_B, initial_seed
from .errors import FrozenIndex, InvalidParams, QGrassError
from .seeds import QuantumSeed, check_compatible, mutate_seed

DEFAULT_UNDO_CAP = 64


class Session:
    def __init__(self, seed: QuantumSeed, undo_cap: int = DEFAULT_UNDO_CAP):
        self.id = uuid.uuid4().hex
        self.seed = seed
        self.undo: list[QuantumSeed] = []
        self.undo_cap = undo_cap
        self.created = time.time()
        self.modified = self.created
        self.lock = threading.Lock()

    def push(self, seed: QuantumSeed):
        self.undo.append(self.seed)
        if len(self.undo) > self.undo_cap:
            self.undo.pop(0)
        self.seed = seed
        self.modified = time.time()

    def pop(self) -> bool:
        if not self.undo:
            return False
        self.seed = self.undo.pop()
        self.modified = time.time()
        return True


class SessionStore:
    def __init__(self, undo_cap: int = DEFAULT_UNDO_CAP, snapshot_dir: str | None = None):
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()
        self.undo_cap = undo_cap
        self.snapshot_dir = snapshot_dir or os.environ.get("QGRASS_SNAPSHOT_DIR")

    def create(self, m: int, n: int) -> Session:
        session = Session(initial_seed(m, n), self.undo_cap)
        with self._lock:
            self._sessions[session.id] = session
        self.snapshot(session)
        return session

    def get(self, session_id: str) -> Session | None:
        with self._lock:
            return self._sessions.get(session_id)

    def snapshot(self, session: Session):
        if not self.snapshot_dir:
            return
        os.makedirs(self.snapshot_dir, exist_ok=True)
        path = os.path.join(self.snapshot_dir, f"{session.id}.json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(session.seed.to_json_dict(), fh)


def _seed_payload(seed: QuantumSeed) -> dict:
    return seed.to_json_dict()


_ROUTES = [
    ("POST", re.compile(r"^/sessions$"), "create"),
    ("GET", re.compile(r"^/sessions/(?P<sid>[0-9a-f]+)$"), "info"),
    ("POST", re.compile(r"^/sessions/(?P<sid>[0-9a-f]+)/mutate$"), "mutate"),
    ("POST", re.compile(r"^/sessions/(?P<sid>[0-9a-f]+)/undo$"), "undo"),
    (
        "GET",
        re.compile(r"^/sessions/(?P<sid>[0-9a-f]+)/variables/(?P<pos>\d+)$"),
        "variables",
    ),
    ("GET", re.compile(r"^/sessions/(?P<sid>[0-9a-f]+)/quasicommutation$"), "quasi"),
]


class QGrassRequestHandler(BaseHTTPRequestHandler):
    server_version = "qgrass/0.1"
    store: SessionStore = None  # set by make_server

    # quiet by default; tests monkeypatch if needed
    def log_message(self, fmt, *args):
        pass

    def _send(self, status: int, payload):
        body = json.dumps(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _error(self, status: int, message: str):
        self._send(status, {"error": message})

    def _json_body(self):
        length = int(self.headers.get("Content-Length") or 0)
        if length == 0:
            return {}
        raw = self.rfile.read(length)
        try:
            return json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError):
            return None

    def _dispatch(self, method: str):
        parsed = urlparse(self.path)
        for verb, pattern, name in _ROUTES:
            if verb != method:
                continue
            match = pattern.match(parsed.path)
            if match:
                handler = getattr(self, f"_route_{name}")
                try:
                    handler(match.groupdict(), parse_qs(parsed.query))
                except QGrassError as exc:
                    self._error(400, str(exc))
                return
        self._error(404, f"no route for {method} {parsed.path}")

    def do_GET(self):
        self._dispatch("GET")

    def do_POST(self):
        self._dispatch("POST")

    # -- route handlers ----------------------------------------------------

    def _session_or_404(self, groups) -> Session | None:
        session = self.store.get(groups["sid"])
        if session is None:
            self._error(404, "unknown session")
        return session

    def _route_create(self, groups, query):
        body = self._json_body()
        if body is None or "m" not in body or "n" not in body:
            self._error(400, "body must be JSON with integer fields m and n")
            return
        try:
            m, n = int(body["m"]), int(body["n"])
        except (TypeError, ValueError):
            self._error(400, "m and n must be integers")
            return
        try:
            session = self.store.create(m, n)
        except InvalidParams as exc:
            self._error(400, str(exc))
            return
        self._send(201, {"id": session.id, "seed": _seed_payload(session.seed)})

    def _route_info(self, groups, query):
        session = self._session_or_404(groups)
        if session is None:
            return
        with session.lock:
            seed = session.seed
        self._send(
            200,
            {
                "seed": _seed_payload(seed),
                "arrows": [[a + 1, b + 1] for a, b in arrows_from_B(seed.B)],
                "mutablePositions": [
                    i + 1 for i, f in enumerate(seed.frozen) if not f
                ],
            },
        )

    def _route_mutate(self, groups, query):
        session = self._session_or_404(groups)
        if session is None:
            return
        body = self._json_body()
        if body is None or "position" not in body:
            self._error(400, "body must be JSON with a position field")
            return
        try:
            pos = int(body["position"]) - 1
        except (TypeError, ValueError):
            self._error(400, "position must be an integer")
            return
        with session.lock:
            seed = session.seed
            if not (0 <= pos < seed.n_positions):
                self._error(404, f"no position {pos + 1}")
                return
            if seed.frozen[pos]:
                self._error(422, f"position {pos + 1} is frozen")
                return
            try:
                new_seed = mutate_seed(seed, pos)
            except FrozenIndex as exc:
                self._error(422, str(exc))
                return
            d = check_compatible(new_seed.B, new_seed.L)
            assert d == (2,) * len(d), f"seed left the d = 2 locus: {d}"
            session.push(new_seed)
        self.store.snapshot(session)
        new_label = new_seed.labels[pos]
        payload = {
            "seed": _seed_payload(new_seed),
            "geometricExchange": new_label is not None,
        }
        if new_label is not None:
            payload["newLabel"] = list(new_label)
        self._send(200, payload)

    def _route_undo(self, groups, query):
        session = self._session_or_404(groups)
        if session is None:
            return
        with session.lock:
            if not session.pop():
                self._error(409, "undo stack is empty")
                return
            seed = session.seed
        self.store.snapshot(session)
        self._send(200, {"seed": _seed_payload(seed)})

    def _route_variables(self, groups, query):
        session = self._session_or_404(groups)
        if session is None:
            return
        pos = int(groups["pos"]) - 1
        with session.lock:
            seed = session.seed
        if not (0 <= pos < seed.n_positions):
            self._error(404, f"no position {pos + 1}")
            return
        self._send(200, seed.vars[pos].serialize())

    def _route_quasi(self, groups, query):
        session = self._session_or_404(groups)
        if session is None:
            return
        try:
            a = int(query.get("a", ["0"])[0]) - 1
            b = int(query.get("b", ["0"])[0]) - 1
        except ValueError:
            self._error(400, "a and b must be integers")
            return
        with session.lock:
            seed = session.seed
        if not (0 <= a < seed.n_positions and 0 <= b < seed.n_positions):
            self._error(404, "position out of range")
            return
        self._send(200, {"lambda": seed.L[a][b]})


def make_server(address: str = "127.0.0.1", port: int = 0, **store_kwargs):
    """Build (but do not start) the threading HTTP server."""
    handler = type(
        "BoundHandler", (QGrassRequestHandler,), {"store": SessionStore(**store_kwargs)}
    )
    return ThreadingHTTPServer((address, port), handler)


def run_service(address: str = "127.0.0.1", port: int = 8642, **store_kwargs):
    server = make_server(address, port, **store_kwargs)
    host, actual_port = server.server_address[:2]
    print(f"qgrass service listening on http://{host}:{actual_port}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
