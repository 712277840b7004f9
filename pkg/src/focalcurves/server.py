"""HTTP JSON API behind the ``serve`` subcommand.

Stateless by design: every request carries the full function text and
configuration, and every handler calls pure core functions, so the threading
server needs no locks or sessions.  Responses carry a permissive CORS header
so a browser UI served from another origin can query the API directly.

Error contract: 400 with ``{"error", "message"}`` for malformed requests
(bad parameters, unparseable expressions), 422 for requests that are well
formed but mathematically inapplicable (non-rational function where an exact
equation is required, degenerate members, evaluation outside the domain).
"""

from __future__ import annotations

import json
import math
import mimetypes
import posixpath
from http import HTTPStatus
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from typing import Callable, Dict, Optional
from urllib.parse import parse_qs, urlparse

from .cli import (
    _KINDS,
    _MATH_ERRORS,
    _MathError,
    _compose_payload,
    _implicit_payload,
    _probe_payload,
    _transform_payload,
)
from .expr import ParseError, parse
from .render import RenderConfig, build_scene, scene_to_dict

__all__ = ["make_server", "serve"]


def _require(params: Dict[str, str], name: str) -> str:
    try:
        return params[name]
    except KeyError:
        raise ValueError(f"missing parameter {name!r}") from None


def _as_float(name: str, text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise ValueError(f"parameter {name!r} must be a number, got {text!r}") from None
    if not math.isfinite(value):
        raise ValueError(f"parameter {name!r} must be finite")
    return value


def _as_int(name: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"parameter {name!r} must be an integer, got {text!r}") from None


def _as_range(text: str):
    lo_text, sep, hi_text = text.partition(":")
    if not sep:
        raise ValueError(f"parameter 'range' must look like A:B, got {text!r}")
    lo = _as_float("range", lo_text)
    hi = _as_float("range", hi_text)
    if not lo < hi:
        raise ValueError("parameter 'range' must be nonempty")
    return lo, hi


def _api_scene(params: Dict[str, str]) -> dict:
    f = parse(_require(params, "f"))
    g = parse(params["g"]) if params.get("g") else None
    lo, hi = _as_range(params.get("range", "-2:2"))
    cfg = RenderConfig(
        arrow_count=_as_int("arrows", params.get("arrows", "21")),
        arrow_range=(lo, hi),
        focal_sample_count=_as_int("samples", params.get("samples", "401")),
        focal_range=(lo, hi),
        delta=_as_float("delta", params.get("delta", "1")),
    )
    return scene_to_dict(build_scene(f, cfg, g))


def _api_probe(params: Dict[str, str]) -> dict:
    return _probe_payload(
        _require(params, "f"),
        _as_float("x0", _require(params, "x0")),
        _as_float("delta", params.get("delta", "1")),
    )


def _api_implicit(params: Dict[str, str]) -> dict:
    return _implicit_payload(_require(params, "f"))


def _api_transform(params: Dict[str, str]) -> dict:
    kind = _require(params, "kind")
    if kind not in _KINDS:
        raise ValueError(f"parameter 'kind' must be one of {sorted(_KINDS)}, got {kind!r}")
    return _transform_payload(_require(params, "g"), kind, _require(params, "c"))


def _api_compose(params: Dict[str, str]) -> dict:
    return _compose_payload(
        _as_float("a", _require(params, "a")),
        _as_float("b", _require(params, "b")),
        _as_float("c", _require(params, "c")),
        _as_float("d", _require(params, "d")),
        _as_float("delta", params.get("delta", "1")),
    )


_ROUTES: Dict[str, Callable[[Dict[str, str]], dict]] = {
    "/api/scene": _api_scene,
    "/api/probe": _api_probe,
    "/api/implicit": _api_implicit,
    "/api/transform": _api_transform,
    "/api/compose": _api_compose,
}


class _Handler(BaseHTTPRequestHandler):
    server_version = "focalcurves"

    def log_message(self, fmt, *args):  # keep test and script output clean
        pass

    def do_GET(self):
        url = urlparse(self.path)
        handler = _ROUTES.get(url.path)
        if handler is not None:
            params = {k: v[-1] for k, v in
                      parse_qs(url.query, keep_blank_values=True).items()}
            self._run_api(handler, params)
        elif getattr(self.server, "static_dir", None) is not None:
            self._serve_static(url.path)
        else:
            self._send_json(HTTPStatus.NOT_FOUND,
                            {"error": "not_found", "message": f"no route {url.path}"})

    def _run_api(self, handler, params):
        try:
            payload = handler(params)
        except _MathError as exc:
            self._send_json(HTTPStatus.UNPROCESSABLE_ENTITY,
                            {"error": "unprocessable", "message": str(exc)})
        except _MATH_ERRORS as exc:
            self._send_json(HTTPStatus.UNPROCESSABLE_ENTITY,
                            {"error": "unprocessable",
                             "message": f"{type(exc).__name__}: {exc}"})
        except ParseError as exc:
            self._send_json(HTTPStatus.BAD_REQUEST,
                            {"error": "bad_request", "message": f"parse error: {exc}"})
        except (ValueError, TypeError) as exc:
            self._send_json(HTTPStatus.BAD_REQUEST,
                            {"error": "bad_request", "message": str(exc)})
        else:
            self._send_json(HTTPStatus.OK, payload)

    def _send_json(self, status, payload) -> None:
        body = json.dumps(payload).encode("utf-8")
        self.send_response(int(status))
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _serve_static(self, route: str) -> None:
        rel = posixpath.normpath(route).lstrip("/")
        if rel.startswith(".."):
            self._send_json(HTTPStatus.NOT_FOUND,
                            {"error": "not_found", "message": "no such file"})
            return
        path = Path(self.server.static_dir) / rel
        if path.is_dir():
            path = path / "index.html"
        if not path.is_file():
            self._send_json(HTTPStatus.NOT_FOUND,
                            {"error": "not_found", "message": "no such file"})
            return
        data = path.read_bytes()
        ctype = mimetypes.guess_type(str(path))[0] or "application/octet-stream"
        self.send_response(HTTPStatus.OK)
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)


def make_server(host: str = "127.0.0.1", port: int = 8642,
                static: Optional[str] = None) -> ThreadingHTTPServer:
    """Build the HTTP server without starting it; port 0 picks a free port."""
    httpd = ThreadingHTTPServer((host, port), _Handler)
    httpd.daemon_threads = True
    httpd.static_dir = static
    return httpd


def serve(host: str = "127.0.0.1", port: int = 8642,
          static: Optional[str] = None) -> None:
    httpd = make_server(host, port, static)
    host_shown, port_shown = httpd.server_address[:2]
    print(f"serving on http://{host_shown}:{port_shown}/")
    try:
        httpd.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        httpd.server_close()
