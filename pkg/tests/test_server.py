"""HTTP JSON API: payload shapes, status codes, CORS, and static files."""

import json
import threading
import urllib.error
import urllib.parse
import urllib.request

import pytest

from focalcurves.server import make_server


@pytest.fixture(scope="module")
def base_url():
    httpd = make_server("127.0.0.1", 0)
    port = httpd.server_address[1]
    thread = threading.Thread(target=httpd.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{port}"
    httpd.shutdown()
    httpd.server_close()


def get(base_url, path, **params):
    url = base_url + path
    if params:
        url += "?" + urllib.parse.urlencode(params)
    try:
        with urllib.request.urlopen(url) as resp:
            return resp.status, json.loads(resp.read()), dict(resp.headers)
    except urllib.error.HTTPError as err:
        return err.code, json.loads(err.read()), dict(err.headers)


def test_scene_endpoint(base_url):
    status, body, headers = get(
        base_url, "/api/scene",
        f="x^2", delta=1, range="-2:2", arrows=21, samples=101,
    )
    assert status == 200
    assert headers["Access-Control-Allow-Origin"] == "*"
    assert len(body["arrows"]) == 21
    assert body["implicit"] == "x^2 + 4*x*y - 2*x + 1 = 0"
    assert body["axes"] == [0.0, 1.0]
    assert body["probe"] is None
    assert all(len(branch) >= 2 for branch in body["focal_branches"])


def test_scene_endpoint_composition(base_url):
    status, body, _ = get(base_url, "/api/scene", f="2x - 2", g="2x + 3")
    assert status == 200
    assert body["axes"] == [0.0, 1.0, 2.0]
    assert len(body["foci"]) == 3


def test_probe_endpoint(base_url):
    status, body, _ = get(base_url, "/api/probe", f="x^2", x0=-1)
    assert status == 200
    assert body["focus"][0] == pytest.approx(1 / 3)
    assert body["focus"][1] == pytest.approx(-1 / 3)
    assert body["fprime"] == pytest.approx(-2.0)
    assert len(body["projective"]) == 3


def test_probe_focus_at_infinity(base_url):
    status, body, _ = get(base_url, "/api/probe", f="x", x0=0.25)
    assert status == 200
    assert body["focus"] is None
    assert body["fprime"] == pytest.approx(1.0)


def test_implicit_endpoint(base_url):
    status, body, _ = get(base_url, "/api/implicit", f="1/(4x)")
    assert status == 200
    assert body["equation"] == "x^2 + y^2 - x = 0"
    assert body["degree"] == 2
    assert body["class"] == "circle"


def test_implicit_endpoint_rejects_transcendental(base_url):
    status, body, _ = get(base_url, "/api/implicit", f="sin(x)")
    assert status == 422
    assert body["error"] == "unprocessable"
    assert body["message"]


def test_transform_endpoint(base_url):
    status, body, _ = get(
        base_url, "/api/transform", g="x^2", kind="shift-input", c="1",
    )
    assert status == 200
    assert body["equation"] == "5*x^2 + 4*x*y - 6*x + 1 = 0"
    assert body["class"] == "hyperbola"


def test_transform_endpoint_unknown_kind(base_url):
    status, body, _ = get(base_url, "/api/transform", g="x^2", kind="rotate", c="1")
    assert status == 400
    assert body["error"] == "bad_request"


def test_compose_endpoint(base_url):
    status, body, _ = get(base_url, "/api/compose", a=2, b=-2, c=2, d=3)
    assert status == 200
    assert body["Ff"] == pytest.approx([-1.0, 2.0])
    assert body["Fg"] == pytest.approx([0.0, -3.0])
    assert body["Fgf"] == pytest.approx([-2 / 3, 1 / 3])
    assert body["t"] == pytest.approx(1 / 3)
    assert body["collinear"] is True


def test_missing_parameter_is_400(base_url):
    status, body, _ = get(base_url, "/api/probe", f="x^2")
    assert status == 400
    assert "x0" in body["message"]


def test_parse_error_is_400(base_url):
    status, body, _ = get(base_url, "/api/scene", f="x^^2")
    assert status == 400
    assert body["error"] == "bad_request"


def test_bad_number_is_400(base_url):
    status, body, _ = get(base_url, "/api/probe", f="x^2", x0="abc")
    assert status == 400
    status, body, _ = get(base_url, "/api/probe", f="x^2", x0="nan")
    assert status == 400


def test_domain_error_is_422(base_url):
    status, body, _ = get(base_url, "/api/probe", f="ln x", x0=-1)
    assert status == 422
    assert body["error"] == "unprocessable"


def test_unknown_route_is_404_without_static(base_url):
    status, body, _ = get(base_url, "/elsewhere")
    assert status == 404
    assert body["error"] == "not_found"


def test_static_file_serving(tmp_path):
    (tmp_path / "index.html").write_text("<!doctype html><title>explorer</title>")
    (tmp_path / "app.js").write_text("console.log('hi')")
    httpd = make_server("127.0.0.1", 0, static=str(tmp_path))
    port = httpd.server_address[1]
    thread = threading.Thread(target=httpd.serve_forever, daemon=True)
    thread.start()
    try:
        base = f"http://127.0.0.1:{port}"
        with urllib.request.urlopen(base + "/") as resp:
            assert resp.status == 200
            assert b"explorer" in resp.read()
            assert resp.headers["Content-Type"].startswith("text/html")
        with urllib.request.urlopen(base + "/app.js") as resp:
            assert resp.status == 200
        # API routes still win over static files
        with urllib.request.urlopen(base + "/api/implicit?f=x%5E2") as resp:
            assert resp.status == 200
        # path escape attempts stay inside the root
        for bad in ("/../etc/passwd", "/%2e%2e/etc/passwd", "/missing.txt"):
            try:
                with urllib.request.urlopen(base + bad) as resp:
                    assert resp.status == 200  # nothing outside may be 200
                    raise AssertionError(f"{bad} unexpectedly resolved")
            except urllib.error.HTTPError as err:
                assert err.code == 404
    finally:
        httpd.shutdown()
        httpd.server_close()
