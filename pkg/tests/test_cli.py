"""Command-line behavior: exit codes, JSON shape, determinism, selftest."""

import json
import subprocess
import sys

import pytest

import qeuler.jacobi as jacobi
from qeuler.cli import main
from qeuler.jacobi import JFraction


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert err == ""
    return code, json.loads(out)


# -- table -----------------------------------------------------------------------


def test_table_enum_rows(capsys):
    code, payload = run_json(
        capsys, "table", "--family", "TypeB", "--nmax", "4", "--route", "enum"
    )
    assert code == 0
    assert payload["command"] == "table"
    assert payload["result"]["rows"] == [
        ["1"],
        ["1", "1"],
        ["1", "6", "1"],
        ["1", "23", "23", "1"],
    ]


def test_table_routes_agree(capsys):
    rows = {}
    for route in ("egf", "cfrac", "enum"):
        code, payload = run_json(
            capsys, "table", "--family", "TypeA", "--nmax", "6", "--route", route
        )
        assert code == 0
        rows[route] = payload["result"]["rows"]
    assert rows["egf"] == rows["cfrac"] == rows["enum"]


def test_table_recurrence_route(capsys):
    code, payload = run_json(
        capsys,
        "table", "--family", "General", "--a", "2", "--d", "5",
        "--nmax", "5", "--route", "recurrence",
    )
    assert code == 0
    code2, payload2 = run_json(
        capsys,
        "table", "--family", "General", "--a", "2", "--d", "5",
        "--nmax", "5", "--route", "egf",
    )
    assert payload["result"]["rows"] == payload2["result"]["rows"]


def test_table_text_format(capsys):
    code, out, err = run_cli(
        capsys, "table", "--family", "TypeB", "--nmax", "3", "--route", "cfrac",
        "--format", "text",
    )
    assert code == 0
    assert "n=2: 1 + 6*q + q^2" in out


# -- cfrac and prodmat -------------------------------------------------------------


def test_cfrac_reports_weights(capsys):
    code, payload = run_json(capsys, "cfrac", "--family", "TypeB", "--depth", "3")
    assert code == 0
    jf = payload["result"]["jfraction"]
    assert jf["s"] == [["1", "1"], ["3", "3"], ["5", "5"]]
    assert jf["t"] == [["0", "4"], ["0", "16"]]


def test_prodmat_general_weights(capsys):
    code, payload = run_json(
        capsys, "prodmat", "--family", "General", "--a", "1", "--d", "3",
        "--order", "6",
    )
    assert code == 0
    result = payload["result"]
    assert result["tridiagonal"] is True
    for i, coeffs in enumerate(result["s"]):
        assert coeffs == [str(3 * i + 1), str(3 * i + 2)]
    for i, coeffs in enumerate(result["t"], start=1):
        assert coeffs == ["0", str(9 * i * i)]


def test_prodmat_matches_cfrac_weights(capsys):
    _, prod = run_json(capsys, "prodmat", "--family", "TypeB", "--order", "7")
    _, cf = run_json(capsys, "cfrac", "--family", "TypeB", "--depth", "5")
    assert prod["result"]["s"][:5] == cf["result"]["jfraction"]["s"]


# -- check ---------------------------------------------------------------------------


def test_check_strong_passes(capsys):
    code, payload = run_json(
        capsys, "check", "--family", "TypeA", "--nmax", "9", "--mode", "strong"
    )
    assert code == 0
    assert payload["result"]["report"]["verdict"] is True
    assert payload["result"]["report"]["witnesses"] == []


def test_check_qlcx_and_zhu(capsys):
    code, _ = run_json(
        capsys, "check", "--family", "TypeB_qt", "--t", "1/2", "--nmax", "8",
        "--mode", "qlcx",
    )
    assert code == 0
    code, payload = run_json(
        capsys, "check", "--family", "TypeB", "--mode", "zhu", "--imax", "6"
    )
    assert code == 0
    report = payload["result"]["report"]
    assert report["verdict"] is True
    assert report["hypothesis_nonneg"] is True
    assert report["checked_range"] == [1, 6]


def test_check_requires_nmax_for_polynomial_modes(capsys):
    code, out, err = run_cli(capsys, "check", "--family", "TypeA", "--mode", "strong")
    assert code == 2
    assert "nmax" in err


# -- conjecture ------------------------------------------------------------------------


def test_conjecture_builtin(capsys):
    code, payload = run_json(
        capsys, "conjecture", "--triangle", "B", "--seq", "ones", "--nmax", "5"
    )
    assert code == 0
    assert payload["result"]["report"]["z"] == ["1", "2", "8", "48", "384", "3840"]
    assert payload["result"]["report"]["verdict"] is True


def test_conjecture_file_input(tmp_path, capsys):
    path = tmp_path / "xs.json"
    path.write_text(json.dumps(["1", "1", "3/2", "3", "15/2", "45/2"]))
    code, payload = run_json(
        capsys, "conjecture", "--triangle", "A", "--seq", str(path), "--nmax", "4"
    )
    assert code == 0
    assert payload["config"]["seq"] == str(path)


def test_conjecture_unknown_sequence(capsys):
    code, out, err = run_cli(
        capsys, "conjecture", "--triangle", "A", "--seq", "fibonacci"
    )
    assert code == 2
    assert "builtin" in err


def test_conjecture_rejects_non_log_convex_file(tmp_path, capsys):
    path = tmp_path / "xs.json"
    path.write_text(json.dumps([1, 5, 1, 5, 1, 5]))
    code, out, err = run_cli(
        capsys, "conjecture", "--triangle", "A", "--seq", str(path), "--nmax", "4"
    )
    assert code == 2
    assert err


# -- invert-moments ----------------------------------------------------------------------


def test_invert_moments_from_family(capsys):
    code, payload = run_json(
        capsys, "invert-moments", "--family", "TypeB", "--nmax", "8", "--depth", "3"
    )
    assert code == 0
    jf = payload["result"]["jfraction"]
    assert jf["s"] == [["1", "1"], ["3", "3"], ["5", "5"]]


def test_invert_moments_from_file(tmp_path, capsys):
    jf = jacobi.jfraction_from_params(1, 1, 1, 4)
    mu = jacobi.moments_by_motzkin_paths(jf, 8)
    path = tmp_path / "mu.json"
    path.write_text(json.dumps(mu.to_json()))
    code, payload = run_json(capsys, "invert-moments", "--file", str(path))
    assert code == 0
    assert JFraction.from_json(payload["result"]["jfraction"]) == jf


def test_invert_moments_scalar_file(tmp_path, capsys):
    # plain rational entries are accepted as constant moments
    path = tmp_path / "mu.json"
    path.write_text(json.dumps(["1", "1", "2", "4", "9", "21"]))
    code, payload = run_json(capsys, "invert-moments", "--file", str(path))
    assert code == 0
    assert payload["result"]["jfraction"]["s"] == [["1"], ["1"], ["1"]]


def test_invert_moments_rejects_degenerate_file(tmp_path, capsys):
    path = tmp_path / "mu.json"
    path.write_text(json.dumps(["1", "0", "0", "0", "0", "0"]))
    code, out, err = run_cli(capsys, "invert-moments", "--file", str(path))
    assert code == 2
    assert "depth" in err or "vanishes" in err


def test_invert_moments_source_flags(capsys, tmp_path):
    code, _, err = run_cli(capsys, "invert-moments")
    assert code == 2
    path = tmp_path / "mu.json"
    path.write_text(json.dumps(["1", "1"]))
    code, _, err = run_cli(
        capsys, "invert-moments", "--file", str(path), "--family", "TypeB"
    )
    assert code == 2


# -- usage errors ----------------------------------------------------------------------


@pytest.mark.parametrize(
    "argv",
    [
        ("table", "--family", "TypeA", "--nmax", "3", "--route", "recurrence"),
        ("table", "--family", "TypeB", "--t", "1", "--nmax", "3", "--route", "egf"),
        ("table", "--family", "TypeA_qt", "--nmax", "3", "--route", "egf"),
        ("cfrac", "--family", "TypeA_qt", "--t", "0.5", "--depth", "3"),
        ("cfrac", "--family", "Dihedral", "--depth", "3"),
        ("table", "--family", "TypeA", "--nmax", "0", "--route", "egf"),
        ("bogus",),
        (),
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 2
    assert out == ""


# -- output handling -------------------------------------------------------------------


def test_output_is_deterministic(capsys):
    args = ("selftest", "--nmax", "3")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert "time" not in out1 and "date" not in out1


def test_out_file_and_directory_override(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("QEULER_OUT_DIR", str(tmp_path))
    code, out, err = run_cli(
        capsys, "table", "--family", "TypeA", "--nmax", "3", "--route", "egf",
        "--out", "rows.json",
    )
    assert code == 0 and out == ""
    written = (tmp_path / "rows.json").read_text()
    code, stdout, _ = run_cli(
        capsys, "table", "--family", "TypeA", "--nmax", "3", "--route", "egf"
    )
    assert written == stdout
    # absolute paths ignore the directory override
    target = tmp_path / "abs.json"
    code, _, _ = run_cli(
        capsys, "table", "--family", "TypeA", "--nmax", "3", "--route", "egf",
        "--out", str(target),
    )
    assert target.read_text() == written


def test_envelope_has_version_but_no_timestamps(capsys):
    _, payload = run_json(capsys, "cfrac", "--family", "TypeB", "--depth", "2")
    assert payload["meta"]["tool"] == "qeuler"
    assert set(payload) == {"meta", "command", "config", "result"}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qeuler", "table", "--family", "TypeB", "--nmax", "3",
         "--route", "enum"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["rows"][2] == ["1", "6", "1"]


# -- selftest ---------------------------------------------------------------------------


def test_selftest_small_run_passes(capsys):
    code, payload = run_json(capsys, "selftest", "--nmax", "3")
    assert code == 0
    result = payload["result"]
    assert result["all_pass"] is True
    # 18 instances, rows n = 0..3, three route pairs each
    assert result["checks"] == 18 * 4 * 3
    assert all(row["pass"] for row in result["matrix"])
    pairs = {row["pair"] for row in result["matrix"]}
    assert pairs == {"egf=cfrac", "cfrac=motzkin", "enum=egf"}


def test_selftest_catches_a_planted_weight_error(capsys, monkeypatch):
    real = jacobi.jfraction_from_params

    def mutated(a, b, d, depth):
        jf = real(a, b, d, depth)
        if jf.depth < 2:
            return jf
        t = list(jf.t)
        t[0] = -t[0]
        return JFraction(jf.s, tuple(t))

    monkeypatch.setattr(jacobi, "jfraction_from_params", mutated)
    code, payload = run_json(capsys, "selftest", "--nmax", "3")
    assert code == 1
    failing = [row for row in payload["result"]["matrix"] if not row["pass"]]
    assert failing
    # both moment computations consume the same mutated weights, so they
    # agree with each other and disagree with the generating function
    assert {row["pair"] for row in failing} == {"egf=cfrac"}


def test_selftest_text_failure_lines(capsys, monkeypatch):
    real = jacobi.jfraction_from_params

    def mutated(a, b, d, depth):
        jf = real(a, b, d, depth)
        if jf.depth < 2:
            return jf
        t = list(jf.t)
        t[0] = -t[0]
        return JFraction(jf.s, tuple(t))

    monkeypatch.setattr(jacobi, "jfraction_from_params", mutated)
    code, out, err = run_cli(capsys, "selftest", "--nmax", "2", "--format", "text")
    assert code == 1
    assert "FAIL" in out
