"""Read-only lookup over a built inventory, as a Python index and as HTTP.

Endpoints::

    GET /emoji/{codepoint-or-literal}
    GET /emoji/by-shortcode/{name}
    GET /senses?word=...&pos=...
"""

from __future__ import annotations

import json
import logging
import signal
import threading
import time
from collections.abc import Iterable
from http import HTTPStatus
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from types import MappingProxyType
from urllib.parse import parse_qs, unquote, urlsplit

from .errors import CodepointError, EmojiNetError
from .ingest import normalize_word
from .inventory import POS_TAGS, EmojiEntry, canonicalize_codepoint, load_inventory

log = logging.getLogger("emojinet.service")

PORT_ENV = "EMOJINET_PORT"


class NotFound(EmojiNetError, LookupError):
    status = HTTPStatus.NOT_FOUND


class BadRequest(EmojiNetError, ValueError):
    status = HTTPStatus.BAD_REQUEST


def normalize_shortcode(name: str) -> str:
    return name.strip().strip(":").strip().lower()


class InventoryIndex:
    """Immutable codepoint, shortcode and (word, pos) indexes over one inventory."""

    def __init__(self, entries: Iterable[EmojiEntry]):
        by_code, by_short, by_sense = {}, {}, {}
        for e in sorted(entries, key=lambda e: e.unicode):
            by_code[e.unicode] = e
            if e.shortcode:
                by_short.setdefault(normalize_shortcode(e.shortcode), e)
            for s in e.senses:
                by_sense.setdefault((s.word, s.pos), []).append(e)
        self.by_codepoint = MappingProxyType(by_code)
        self.by_shortcode = MappingProxyType(by_short)
        self.by_sense = MappingProxyType({k: tuple(v) for k, v in by_sense.items()})

    @classmethod
    def load(cls, path) -> InventoryIndex:
        return cls(load_inventory(path))

    def __len__(self) -> int:
        return len(self.by_codepoint)

    def get_by_codepoint(self, raw: str) -> EmojiEntry:
        try:
            code = canonicalize_codepoint(raw)
        except CodepointError as exc:
            raise BadRequest(str(exc)) from exc
        try:
            return self.by_codepoint[code]
        except KeyError:
            raise NotFound(f"no emoji {code}") from None

    def get_by_shortcode(self, name: str) -> EmojiEntry:
        key = normalize_shortcode(name)
        if not key:
            raise BadRequest("empty shortcode")
        try:
            return self.by_shortcode[key]
        except KeyError:
            raise NotFound(f"no emoji with shortcode {key!r}") from None

    def search_by_sense(self, word: str, pos: str) -> list[EmojiEntry]:
        if pos not in POS_TAGS:
            raise BadRequest(f"pos must be one of {', '.join(POS_TAGS)}")
        return list(self.by_sense.get((normalize_word(word), pos), ()))


def _route(index: InventoryIndex, raw_path: str) -> dict:
    parts = urlsplit(raw_path)
    path = parts.path
    if path.startswith("/emoji/by-shortcode/"):
        entry = index.get_by_shortcode(unquote(path[len("/emoji/by-shortcode/"):]))
        return {"status": "ok", "entry": entry.to_record()}
    if path.startswith("/emoji/"):
        entry = index.get_by_codepoint(unquote(path[len("/emoji/"):]))
        return {"status": "ok", "entry": entry.to_record()}
    if path == "/senses":
        query = parse_qs(parts.query)
        word = query.get("word", [""])[0]
        pos = query.get("pos", [""])[0]
        if not word.strip():
            raise BadRequest("missing 'word' parameter")
        entries = index.search_by_sense(word, pos)
        return {"status": "ok", "entries": [e.to_record() for e in entries]}
    raise NotFound(f"no route for {path}")


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    server_version = "emojinet"
    index: InventoryIndex

    def do_GET(self):
        t0 = time.perf_counter()
        try:
            status, body = HTTPStatus.OK, _route(self.index, self.path)
        except (NotFound, BadRequest) as exc:
            status, body = exc.status, {"status": "error", "error": str(exc)}
        except Exception:  # pragma: no cover - last-resort guard
            log.exception("unhandled error for %s", self.path)
            status, body = HTTPStatus.INTERNAL_SERVER_ERROR, {"status": "error", "error": "internal error"}
        payload = json.dumps(body, ensure_ascii=False).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(payload)))
        self.end_headers()
        self.wfile.write(payload)
        log.info(
            json.dumps(
                {
                    "method": "GET",
                    "path": self.path,
                    "status": int(status),
                    "ms": round((time.perf_counter() - t0) * 1000, 3),
                }
            )
        )

    def log_message(self, format, *args):
        pass


def make_server(index: InventoryIndex, host: str = "127.0.0.1", port: int = 0) -> ThreadingHTTPServer:
    handler = type("InventoryHandler", (_Handler,), {"index": index})
    server = ThreadingHTTPServer((host, port), handler)
    server.daemon_threads = True
    return server


def serve(inventory_path, host: str = "127.0.0.1", port: int = 8080) -> None:
    """Serve until SIGINT/SIGTERM."""
    index = InventoryIndex.load(inventory_path)
    server = make_server(index, host, port)
    log.info(json.dumps({"event": "listening", "host": host, "port": server.server_address[1], "entries": len(index)}))

    def stop(signum, frame):
        threading.Thread(target=server.shutdown, daemon=True).start()

    signal.signal(signal.SIGTERM, stop)
    signal.signal(signal.SIGINT, stop)
    try:
        server.serve_forever()
    finally:
        server.server_close()
        log.info(json.dumps({"event": "stopped"}))
