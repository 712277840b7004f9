"""Command-line interface: output shapes and the 0/1/2 exit-code contract."""

import json

import pytest

from focalcurves.algebra import Poly2
from focalcurves.cli import main

X = Poly2.x()
Y = Poly2.y()


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_implicit_prints_equation_and_class(capsys):
    code, out, _ = run(capsys, "implicit", "x^2")
    assert code == 0
    assert out.strip() == "x^2 + 4*x*y - 2*x + 1 = 0 [hyperbola]"


def test_implicit_json_payload(capsys):
    code, out, _ = run(capsys, "implicit", "1/(4x)", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["equation"] == "x^2 + y^2 - x = 0"
    assert payload["degree"] == 2
    assert payload["class"] == "circle"
    assert Poly2.from_json_obj(payload["poly2"]) == X * X + Y * Y - X


def test_implicit_requires_rational_function(capsys):
    code, _, err = run(capsys, "implicit", "sin(x)")
    assert code == 2
    assert "not a ratio of polynomials" in err


def test_parse_errors_exit_one(capsys):
    code, _, err = run(capsys, "implicit", "x^^2")
    assert code == 1
    assert "parse error" in err


def test_unknown_flag_exits_one(capsys):
    code, _, _ = run(capsys, "implicit", "x^2", "--nope")
    assert code == 1


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0


def test_probe_json(capsys):
    code, out, _ = run(capsys, "probe", "x^2", "--x0", "-1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["focus"][0] == pytest.approx(1 / 3, abs=1e-12)
    assert payload["focus"][1] == pytest.approx(-1 / 3, abs=1e-12)
    assert payload["fprime"] == pytest.approx(-2.0, abs=1e-12)
    assert len(payload["projective"]) == 3


def test_probe_outside_domain_exits_two(capsys):
    code, _, err = run(capsys, "probe", "ln x", "--x0", "-1")
    assert code == 2
    assert err


def test_probe_at_infinity(capsys):
    code, out, _ = run(capsys, "probe", "x", "--x0", "0.5")
    assert code == 0
    assert "focus at infinity" in out


def test_focal_subcommand(capsys):
    code, out, _ = run(capsys, "focal", "x^2", "--at", "-1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["affine"][0] == pytest.approx(1 / 3, abs=1e-12)
    assert payload["tangent"] is not None


def test_classify_subcommand(capsys):
    text = (X * X + Y * Y - X).to_json()
    code, out, _ = run(capsys, "classify", "--poly2", text)
    assert code == 0
    assert out.strip() == "circle"

    code, _, _ = run(capsys, "classify", "--poly2", "{not json")
    assert code == 1


def test_transform_subcommand(capsys):
    code, out, _ = run(capsys, "transform", "--g", "x^2", "--kind", "shift-input", "--c", "1")
    assert code == 0
    assert out.strip() == "5*x^2 + 4*x*y - 6*x + 1 = 0 [hyperbola]"

    code, _, _ = run(capsys, "transform", "--g", "x^2", "--kind", "scale-output", "--c", "0")
    assert code in (1, 2)

    code, _, _ = run(capsys, "transform", "--g", "x^2", "--kind", "scale-output", "--c", "1/nope")
    assert code == 1


def test_compose_subcommand(capsys):
    code, out, _ = run(capsys, "compose", "--f", "2x - 2", "--g", "2x + 3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["Ff"] == pytest.approx([-1.0, 2.0])
    assert payload["Fg"] == pytest.approx([0.0, -3.0])
    assert payload["Fgf"] == pytest.approx([-2 / 3, 1 / 3])
    assert payload["t"] == pytest.approx(1 / 3)
    assert payload["collinear"] is True


def test_compose_product_one(capsys):
    code, out, _ = run(capsys, "compose", "--f", "2x + 1", "--g", "x/2 + 1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["t"] is None
    assert len(payload["Fgf"]) == 3
    assert payload["Fgf"][2] == pytest.approx(0.0)
    assert payload["collinear"] is True


def test_compose_rejects_nonlinear(capsys):
    code, _, err = run(capsys, "compose", "--f", "x^2", "--g", "x")
    assert code == 2
    assert "not linear" in err


def test_plot_writes_svg_and_json(tmp_path, capsys):
    svg_path = tmp_path / "scene.svg"
    json_path = tmp_path / "scene.json"
    code, out, _ = run(
        capsys, "plot", "x^2",
        "--svg", str(svg_path), "--json", str(json_path),
        "--probe", "-1",
    )
    assert code == 0
    svg = svg_path.read_text()
    assert svg.startswith("<svg ")
    payload = json.loads(json_path.read_text())
    assert payload["delta"] == 1.0
    assert payload["implicit"] == "x^2 + 4*x*y - 2*x + 1 = 0"
    assert payload["probe"]["fprime"] == pytest.approx(-2.0)


def test_plot_json_to_stdout(capsys):
    code, out, _ = run(capsys, "plot", "x^2", "--json", "-")
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {
        "delta", "axes", "arrows", "focal_branches", "cusps",
        "probe", "foci", "implicit", "viewport",
    }


def test_plot_composition(capsys):
    code, out, _ = run(capsys, "plot", "2x - 2", "--g", "2x + 3", "--json", "-")
    assert code == 0
    payload = json.loads(out)
    assert payload["axes"] == [0.0, 1.0, 2.0]
    assert len(payload["foci"]) == 3


def test_plot_rejects_bad_range(capsys):
    code, _, _ = run(capsys, "plot", "x^2", "--range", "2:-2")
    assert code == 1
