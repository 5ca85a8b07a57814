import json
import math
from fractions import Fraction

import pytest

from geonet.circle import INFINITY, tangent_point
from geonet.cli import dispatch
from geonet.errors import ParseError, VersionError
from geonet.exact import RadExpr
from geonet.io import (
    network_from_dict,
    network_to_dict,
    read_network,
    scalar_to_json,
    write_network,
)
from geonet.network import InteriorEdge, Vertex, canonical_key, make_network
from geonet.sweep import SphereConfig, minmax_closed_form
from helpers import golden_triangle, line_network, pt, square_network


def roundtrip(net, tmp_path):
    path = tmp_path / "net.json"
    write_network(net, path)
    return read_network(path)


def test_roundtrip_golden(tmp_path):
    net = golden_triangle()
    back = roundtrip(net, tmp_path)
    assert canonical_key(back) == canonical_key(net)
    assert [v.position.tan_half for v in back.vertices] == [
        v.position.tan_half for v in net.vertices
    ]
    assert [v.exterior_mult for v in back.vertices] == [100, 56, 100]
    assert [(e.i, e.j, e.mult) for e in back.edges] == [
        (e.i, e.j, e.mult) for e in net.edges
    ]


def test_roundtrip_infinity(tmp_path):
    back = roundtrip(line_network(5), tmp_path)
    assert back.vertices[1].position.tan_half is INFINITY


def test_tan_half_encoding():
    data = network_to_dict(golden_triangle())
    assert data["version"] == "geonet/1"
    assert data["vertices"][0]["tan_half"] == [0, 1]
    assert data["vertices"][1]["tan_half"] == [4, 3]
    assert data["vertices"][2]["tan_half"] == [-24, 7]
    assert network_to_dict(line_network())["vertices"][1]["tan_half"] == "inf"


def test_radical_positions_serialize_as_null(tmp_path):
    # tan(pi/8)-style points have no rational encoding; they degrade to float
    p = tangent_point(pt(0), pt(1))
    assert isinstance(p.tan_half, RadExpr)
    net = make_network(
        [Vertex(pt(0), 1), Vertex(p, 2), Vertex(pt(INFINITY), 1)],
        [InteriorEdge(0, 2, 1)],
    )
    data = network_to_dict(net)
    assert data["vertices"][1]["tan_half"] is None
    back = roundtrip(net, tmp_path)
    assert back.vertices[1].position.tan_half is None
    assert back.vertices[1].position.angle == pytest.approx(p.angle)


def test_version_rejected():
    data = network_to_dict(line_network())
    data["version"] = "geonet/999"
    with pytest.raises(VersionError):
        network_from_dict(data)


def test_missing_keys_rejected():
    data = network_to_dict(line_network())
    del data["edges"]
    with pytest.raises(ParseError):
        network_from_dict(data)
    with pytest.raises(ParseError):
        network_from_dict({"version": "geonet/1", "vertices": 3, "edges": []})


def test_malformed_json_reports_position(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"version": "geonet/1",\n  "vertices": [}', encoding="utf-8")
    with pytest.raises(ParseError) as info:
        read_network(path)
    assert info.value.line == 2
    assert info.value.column is not None
    assert "line 2" in str(info.value)


def test_malformed_records_rejected():
    base = network_to_dict(line_network())
    bad = json.loads(json.dumps(base))
    bad["vertices"][0]["tan_half"] = [1, 0]
    with pytest.raises(ParseError):
        network_from_dict(bad)
    bad = json.loads(json.dumps(base))
    bad["vertices"][0]["m"] = 1.5
    with pytest.raises(ParseError):
        network_from_dict(bad)
    bad = json.loads(json.dumps(base))
    bad["edges"][0] = {"i": 0, "j": 1}
    with pytest.raises(ParseError):
        network_from_dict(bad)


def test_scalar_encoding():
    assert scalar_to_json(7) == 7
    assert scalar_to_json(Fraction(3, 1)) == 3
    assert scalar_to_json(Fraction(-8, 5)) == [-8, 5]
    assert scalar_to_json(RadExpr.of(Fraction(1, 2))) == [1, 2]
    radical = RadExpr.of(1) + RadExpr.sqrt(2)
    assert scalar_to_json(radical) == {"radical_terms": [[1, 1, 1], [2, 1, 1]]}


# --- command-line behavior -------------------------------------------------

def write_fixture(net, tmp_path, name="net.json"):
    path = tmp_path / name
    write_network(net, path)
    return str(path)


def test_cli_validate_success(tmp_path, capsys):
    path = write_fixture(golden_triangle(), tmp_path)
    assert dispatch(["validate", "--network", path]) == 0
    captured = capsys.readouterr()
    report = json.loads(captured.out)
    assert report["admissible"] is True
    assert report["stationary"] is True
    assert report["vertices"] == 3 and report["edges"] == 3
    assert captured.err == ""


def test_cli_validate_failure_writes_only_stderr(tmp_path, capsys):
    path = write_fixture(square_network(), tmp_path)
    assert dispatch(["validate", "--network", path]) == 1
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "not admissible" in captured.err


def test_cli_missing_file_is_failure(tmp_path, capsys):
    assert dispatch(["validate", "--network", str(tmp_path / "nope.json")]) == 1
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "error:" in captured.err


def test_cli_usage_errors(capsys):
    assert dispatch(["validate"]) == 2  # missing --network
    assert dispatch(["frobnicate"]) == 2
    out = capsys.readouterr()
    assert out.out == ""


def test_cli_enumerate(capsys):
    assert dispatch(["enumerate", "--n", "4"]) == 0
    rows = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert len(rows) == 3  # empty set plus each lone diagonal
    assert dispatch(["enumerate", "--n", "4", "--allow-adjacent", "--max-only"]) == 0
    rows = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert len(rows) == 2
    assert all(len(r["chords"]) == 5 for r in rows)


def test_cli_solve_fixed_exterior(tmp_path, capsys):
    path = write_fixture(golden_triangle(), tmp_path)
    assert dispatch(["solve", "--network", path, "--fix-exterior"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["unknowns"] == ["edge:0-1", "edge:0-2", "edge:1-2"]
    assert out["nullity"] == 0
    assert out["particular"] == [35, 75, 35]
    assert out["fixed_exterior"] == [100, 56, 100]


def test_cli_solve_positive_search(tmp_path, capsys):
    path = write_fixture(golden_triangle(), tmp_path)
    assert dispatch(["solve", "--network", path, "--bound", "100"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["kernel"] == [[100, 56, 100, 35, 75, 35]]
    assert [100, 56, 100, 35, 75, 35] in out["positive_solutions"]


def test_cli_replace(tmp_path, capsys):
    line_path = write_fixture(line_network(2), tmp_path, "line.json")
    assert dispatch(["replace", "--network", line_path, "--vertex", "0"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["replacement"] is not None
    golden_path = write_fixture(golden_triangle(), tmp_path, "golden.json")
    assert dispatch(["replace", "--network", golden_path, "--vertex", "0"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["replacement"] is None
    assert out["problem"]["mults"] == [100, 35, 75]
    assert dispatch(["replace", "--network", golden_path, "--vertex", "9"]) == 1


def test_cli_audit(tmp_path, capsys):
    path = write_fixture(golden_triangle(), tmp_path)
    assert dispatch(["audit", "--network", path, "--depth", "2"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["status"].startswith("refuted")
    assert "no replacement" in out["detail"]


def test_cli_certify(capsys):
    assert dispatch(["certify-n3"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["status"] == "refuted-at-depth-2"
    assert out["witness"] == "(3/4)·π"
    assert "(3/4)·π is not a rational point" in out["detail"]


def test_cli_sweep(tmp_path, capsys):
    csv_path = tmp_path / "sweep.csv"
    assert (
        dispatch(
            ["sweep", "--c", "1.0", "--samples", "101", "--emit-csv", str(csv_path)]
        )
        == 0
    )
    out = json.loads(capsys.readouterr().out)
    assert out["value"] == pytest.approx(
        minmax_closed_form(SphereConfig(c=1.0)), abs=1e-8
    )
    assert out["argmax_phi"] == pytest.approx(math.pi / 4, abs=1e-6)
    lines = csv_path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "t,phi,c_length"
    assert len(lines) == 102


def test_cli_sweep_flow(capsys):
    assert dispatch(["sweep", "--c", "1.0", "--flow", "--points", "64"]) == 0
    out = json.loads(capsys.readouterr().out)
    flow = out["flow_curve"]
    assert len(flow["points"]) == 64
    assert flow["max_curvature_deviation"] < 1e-3
    assert flow["final_c_length"] == pytest.approx(out["closed_form"], abs=5e-3)


def test_cli_sweep_rejects_bad_c(capsys):
    assert dispatch(["sweep", "--c", "-1.0"]) == 1
    captured = capsys.readouterr()
    assert captured.out == ""


def test_cli_render(tmp_path, capsys):
    path = write_fixture(golden_triangle(), tmp_path)
    assert dispatch(["render", "--network", path]) == 0
    svg = capsys.readouterr().out
    assert svg.startswith("<svg ")
    assert svg.count('class="ray"') == 3
    assert svg.count('class="chord"') == 3
    assert 'class="label"' not in svg
    assert dispatch(["render", "--network", path, "--labels"]) == 0
    assert capsys.readouterr().out.count('class="label"') == 3


def test_cli_render_deterministic(tmp_path, capsys):
    path = write_fixture(golden_triangle(), tmp_path)
    assert dispatch(["render", "--network", path]) == 0
    first = capsys.readouterr().out
    assert dispatch(["render", "--network", path]) == 0
    assert capsys.readouterr().out == first
