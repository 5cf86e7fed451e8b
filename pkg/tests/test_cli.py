import io
import json
import os
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from powergeom.cli import parse_points, run, UsageError


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="module")
def validator():
    schema = json.loads(resources.files("powergeom").joinpath("data/report.schema.json")
                        .read_text("utf-8"))
    jsonschema.Draft202012Validator.check_schema(schema)
    return jsonschema.Draft202012Validator(schema)


@pytest.mark.parametrize("name", ["painleve1", "painleve2", "painleve3", "painleve4",
                                  "painleve5"])
@pytest.mark.parametrize("conv", ["plain", "count-dependent"])
def test_analyze_json_validates(validator, name, conv):
    code, out, _ = call("analyze", "--preset", name, "--convention", conv, "--format", "json")
    assert code == 0
    validator.validate(json.loads(out))


def test_p4_json_summary(validator):
    code, out, _ = call("analyze", "--preset", "painleve4", "--dim", "4", "--format", "json")
    doc = json.loads(out)
    assert len(doc["facets"]) == 5
    assert sum(f["admissible"] for f in doc["facets"]) == 3
    orders = {f["plane"]: f["candidate_orders"] for f in doc["facets"]}
    assert orders["q1 + q2 + 2q3 + 3q4 = 4"] == {
        "gamma": "1", "gamma1": "2", "gamma2": "3", "regime": "infinity", "shift": "-4"}


def test_regime_filter():
    _, out, _ = call("analyze", "--preset", "painleve4", "--regime", "zero", "--format", "json")
    regimes = {f["candidate_orders"]["regime"] for f in json.loads(out)["facets"]
               if f["candidate_orders"]}
    assert regimes == {"zero"}


def test_p2_text_names_the_hyperplane():
    code, out, _ = call("analyze", "--preset", "painleve2", "--dim", "4")
    assert code == 0
    assert "q3 = 0" in out and "degenerate-hyperplane-n1-zero" in out


def test_lower_dimensions_and_file_input(tmp_path, validator):
    path = tmp_path / "eq.txt"
    path.write_text("w'' = 6*w^2 + z\n", "utf-8")
    for dim in ("2", "3"):
        code, out, _ = call("analyze", "--file", str(path), "--dim", dim, "--format", "json")
        assert code == 0
        doc = json.loads(out)
        validator.validate(doc)
        assert doc["preset"] == "painleve1"
    assert any(e["id"] == "MAP-2D" for e in doc["errata"]) is False
    code, out, _ = call("analyze", "--file", str(path), "--dim", "2", "--format", "json")
    assert any(e["id"] == "MAP-2D" for e in json.loads(out)["errata"])


def test_hull_command(validator):
    code, out, _ = call("hull", "--points", "(0,0),(1,0),(0,1),(1,1)")
    assert code == 0
    assert "4 vertices" in out and "4 edges" in out
    code, out, _ = call("hull", "--points", "(0,0) (1,0) (0,1) (1,1)", "--format", "json")
    doc = json.loads(out)
    validator.validate(doc)
    assert doc["f_vector"] == [4, 4, 1]


def test_order_command(validator):
    code, out, _ = call("order", "--psi", "z+z^2.5", "--dpsi", "1+2.5*z^1.5",
                        "--d2psi", "3.75*z^0.5", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    validator.validate(doc)
    assert doc["rays"][0]["gaps"]["adequacy"] == "4d-necessary"
    code, out, _ = call("order", "--psi", "z^3", "--phi", "0,1.5", "--regime", "infinity")
    assert code == 0 and out.count("order 3") == 2


def test_explain_and_presets():
    code, out, _ = call("analyze", "--preset", "painleve4", "--explain")
    assert code == 0 and "P4-TYPO" in out and "8*z*w^3" in out
    code, out, _ = call("presets")
    assert code == 0 and len(out.splitlines()) == 5


def test_out_file(tmp_path):
    target = tmp_path / "r.json"
    code, out, _ = call("analyze", "--preset", "painleve3", "--format", "json",
                        "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text("utf-8"))["preset"] == "painleve3"


@pytest.mark.parametrize("argv,needle", [
    (["analyze", "--equation", "w''' + w"], "above 2"),
    (["analyze", "--equation", "1/(w-1)"], "division"),
    (["analyze", "--preset", "painleve9"], "unknown preset"),
    (["analyze", "--preset", "painleve3", "--assume", "epsilon=1"], "unknown parameter"),
    (["analyze", "--equation", "w - w"], "identically zero"),
    (["analyze", "--file", "/nonexistent/eq.txt"], ""),
    (["analyze"], ""),
    (["analyze", "--equation", "w", "--explain"], "--explain"),
    (["hull", "--points", "(0,0),(1"], "malformed"),
    (["hull", "--points", "(0,0),(0,0)"], "duplicate"),
    (["order", "--psi", "z", "--dpsi", "1"], "together"),
    (["order", "--psi", "0*z"], "zero"),
    (["order", "--psi", "import os"], ""),
    (["order", "--psi", "z", "--ratio", "2"], "ratio"),
    (["bogus"], ""),
])
def test_input_errors_exit_1(argv, needle):
    code, out, err = call(*argv)
    assert code == 1
    assert out == ""
    assert err.startswith("error:") and needle in err


def test_parse_error_shows_caret():
    _, _, err = call("analyze", "--equation", "w + 1.5")
    assert "^" in err


def test_internal_error_exits_2(monkeypatch):
    from powergeom import cli
    from powergeom.polyhedron import HullInvariantError

    def boom(lattice):
        raise HullInvariantError("synthetic")
    monkeypatch.setattr(cli, "check_lattice", boom)
    code, _, err = call("hull", "--points", "(0,0),(1,0)")
    assert code == 2 and "internal error" in err


def test_parse_points():
    assert parse_points(" (1, -2,3),(0,0,0) ") == [(1, -2, 3), (0, 0, 0)]
    with pytest.raises(UsageError):
        parse_points("")


def test_json_is_independent_of_hash_seed():
    outs = []
    for seed in ("1", "2"):
        env = {**os.environ, "PYTHONHASHSEED": seed}
        proc = subprocess.run([sys.executable, "-m", "powergeom", "analyze", "--preset",
                               "painleve5", "--format", "json"],
                              capture_output=True, env=env, check=True)
        outs.append(proc.stdout)
    assert outs[0] == outs[1]
