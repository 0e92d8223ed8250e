import json
import math
from fractions import Fraction

import pytest

from biorthopoly.cli import main

F = Fraction

WORKED = {"nodes": ["0", "1", "2"], "values": ["1", "2", "5"], "mode": "exact"}


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def write_problem(tmp_path, payload, name="problem.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload))
    return str(path)


def test_interpolate_worked_example(tmp_path, capsys):
    path = write_problem(tmp_path, WORKED)
    code, report = run(capsys, ["interpolate", path, "--degree", "2"])
    assert code == 0
    assert report["passed"] is True
    assert report["outputs"]["newton"] == ["1", "0", "1"]
    assert report["outputs"]["lagrange"] == ["1", "0", "1"]
    names = [c["name"] for c in report["checks"]]
    assert names == ["newton_lagrange_equal", "interpolation_conditions"]


def test_interpolate_constant_data(tmp_path, capsys):
    path = write_problem(tmp_path, {"nodes": ["4"], "values": ["-7/3"]})
    code, report = run(capsys, ["interpolate", path, "--degree", "0"])
    assert code == 0
    assert report["outputs"]["newton"] == ["-7/3"]


def test_serialized_polynomials_reparse(tmp_path, capsys):
    path = write_problem(tmp_path, WORKED)
    _, report = run(capsys, ["interpolate", path, "--degree", "2"])
    coeffs = [F(text) for text in report["outputs"]["newton"]]
    assert coeffs == [F(1), F(0), F(1)]


def test_mismatched_lengths_is_parse_error(tmp_path, capsys):
    path = write_problem(tmp_path, {"nodes": ["0", "1"], "values": ["1"]})
    code, _ = run(capsys, ["interpolate", path, "--degree", "1"])
    assert code == 2


def test_unparsable_scalar_is_parse_error(tmp_path, capsys):
    path = write_problem(tmp_path, {"nodes": ["0", "oops"], "values": ["1", "2"]})
    code, _ = run(capsys, ["interpolate", path, "--degree", "1"])
    assert code == 2


def test_duplicate_nodes_is_parse_error(tmp_path, capsys):
    path = write_problem(tmp_path, {"nodes": ["0", "0"], "values": ["1", "2"]})
    code, _ = run(capsys, ["interpolate", path, "--degree", "1"])
    assert code == 2


def test_degree_out_of_range(tmp_path, capsys):
    path = write_problem(tmp_path, {"nodes": ["0", "1"], "values": ["1", "2"]})
    code, _ = run(capsys, ["interpolate", path, "--degree", "5"])
    assert code == 3


def test_stdin_problem(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(WORKED)))
    code, report = run(capsys, ["interpolate", "-", "--degree", "2"])
    assert code == 0
    assert report["outputs"]["newton"] == ["1", "0", "1"]


def test_mode_override(tmp_path, capsys):
    payload = dict(WORKED, mode="float")
    path = write_problem(tmp_path, payload)
    code, report = run(capsys, ["interpolate", path, "--mode", "exact",
                                "--degree", "2"])
    assert code == 0
    assert report["mode"] == "exact"
    assert report["outputs"]["newton"] == ["1", "0", "1"]


def test_float_mode_report(tmp_path, capsys):
    payload = {"nodes": ["0", "0.5", "1"], "values": ["1", "2", "5"],
               "mode": "float"}
    path = write_problem(tmp_path, payload)
    code, report = run(capsys, ["interpolate", path, "--degree", "2"])
    assert code == 0
    assert report["mode"] == "float"
    assert float(report["outputs"]["newton"][0]) == 1.0


def test_recurrence_round_trip(tmp_path, capsys):
    path = write_problem(tmp_path, WORKED)
    code, report = run(capsys, ["recurrence", path])
    assert code == 0
    assert [c["name"] for c in report["checks"]] == [
        "recurrence_consistency", "nodal_difference_identity",
        "values_roundtrip", "phats_roundtrip"]
    assert all(c["pass"] for c in report["checks"])
    assert report["outputs"]["alphas"] == ["1", "1", "1"]
    assert report["outputs"]["implied_values"] == ["1", "2", "5"]


def test_check_biortho_worked_example(tmp_path, capsys):
    path = write_problem(tmp_path, WORKED)
    code, report = run(capsys, ["check-biortho", path, "--n-max", "1"])
    assert code == 0
    assert report["outputs"]["matrix"] == [["-1/2", "0"], ["0", "-1"]]
    assert report["outputs"]["diagonal"] == ["-1/2", "-1"]
    assert all(c["pass"] for c in report["checks"])
    # the report must document the normalization deviations it relies on
    notes = " ".join(report["notes"])
    assert "-1/(nu_n*alpha_n)" in notes
    assert "+1/alpha_n" in notes
    assert "weight" in notes


def test_check_biortho_constant_data(tmp_path, capsys):
    path = write_problem(tmp_path, {"nodes": ["0", "1", "2"],
                                    "values": ["3", "3", "3"]})
    code, _ = run(capsys, ["check-biortho", path, "--n-max", "1"])
    assert code == 4


def test_check_biortho_zero_value(tmp_path, capsys):
    path = write_problem(tmp_path, {"nodes": ["0", "1", "2"],
                                    "values": ["1", "0", "5"]})
    code, _ = run(capsys, ["check-biortho", path, "--n-max", "1"])
    assert code == 4


def test_expand_reconstructs(tmp_path, capsys):
    payload = {"nodes": ["0", "1", "2", "3"], "values": ["1", "2", "5", "11"]}
    path = write_problem(tmp_path, payload)
    code, report = run(capsys, ["expand", path, "--poly", '["0", "0", "1"]'])
    assert code == 0
    assert report["outputs"]["coefficients"] == ["-1", "0", "1"]
    assert report["checks"][0]["name"] == "reconstruction"
    assert report["checks"][0]["pass"]


def test_expand_needs_enough_samples(tmp_path, capsys):
    path = write_problem(tmp_path, WORKED)
    code, _ = run(capsys, ["expand", path, "--poly", '["0", "0", "1"]'])
    assert code == 3


def test_expand_bad_poly_json(tmp_path, capsys):
    path = write_problem(tmp_path, WORKED)
    code, _ = run(capsys, ["expand", path, "--poly", "not json"])
    assert code == 2


def test_exp_example_all_checks_pass(capsys):
    code, report = run(capsys, ["exp-example", "--q", "2", "--n-max", "4"])
    assert code == 0
    assert report["passed"] is True
    names = {c["name"] for c in report["checks"]}
    assert {"interpolant_closed_form", "alpha_closed_form", "nu_closed_form",
            "t_closed_form", "v_routes_agree", "grid_power_values"} <= names


def test_exp_example_rational_q(capsys):
    code, report = run(capsys, ["exp-example", "--q", "5/3", "--n-max", "3"])
    assert code == 0
    assert report["outputs"]["nus"][0] == "5/2"  # q/(q-1) at q = 5/3


def test_exp_example_rejects_degenerate_q(capsys):
    for q in ("0", "1"):
        code, _ = run(capsys, ["exp-example", "--q", q])
        assert code == 2


def test_exp_example_with_contour(capsys):
    code, report = run(capsys, ["exp-example", "--q", "2", "--n-max", "2",
                                "--with-contour"])
    assert code == 0
    by_name = {c["name"]: c for c in report["checks"]}
    assert by_name["contour_hermite"]["pass"]
    assert by_name["contour_biortho"]["pass"]
    assert float(by_name["contour_hermite"]["residual"]) < 1e-8


def test_exp_example_negative_q_needs_explicit_h(capsys):
    code, _ = run(capsys, ["exp-example", "--q", "-1", "--with-contour"])
    assert code == 2


def test_hermite_command(capsys):
    code, report = run(capsys, ["hermite", "--h", repr(math.log(2.0)),
                                "--k", "3"])
    assert code == 0
    assert abs(float(report["outputs"]["estimate_real"]) - 1 / 6) < 1e-8
    assert all(c["pass"] for c in report["checks"])


def test_hermite_contour_override(capsys):
    code, report = run(capsys, ["hermite", "--h", "0.1", "--k", "2",
                                "--contour", "9.5/1024"])
    assert code == 0
    assert report["outputs"]["circle"]["radius"] == 9.5
    assert report["outputs"]["circle"]["sample_count"] == 1024


def test_hermite_bad_contour_spec(capsys):
    code, _ = run(capsys, ["hermite", "--h", "0.1", "--k", "2",
                           "--contour", "wide"])
    assert code == 2


def test_reports_echo_command_and_digest(tmp_path, capsys):
    path = write_problem(tmp_path, WORKED)
    _, first = run(capsys, ["interpolate", path, "--degree", "2"])
    _, second = run(capsys, ["interpolate", path, "--degree", "2"])
    assert first["command"] == "interpolate"
    assert first["inputs_digest"].startswith("sha256:")
    assert first["inputs_digest"] == second["inputs_digest"]
