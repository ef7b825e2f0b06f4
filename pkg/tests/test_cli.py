import json

import pytest

from unimodshift import cli


def write_poly(tmp_path, coeffs, name="p.json"):
    path = tmp_path / name
    path.write_text(json.dumps({"degree": len(coeffs) - 1, "coefficients": [str(c) for c in coeffs]}))
    return str(path)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "coeffs, d, expected",
    [([1, 2, 3], "1/2", ["11/4", "5", "3"]), ([0, 0, 0, 0, 0, 1], "1", ["1", "5", "10", "10", "5", "1"])],
)
def test_shift(tmp_path, capsys, coeffs, d, expected):
    code, out, _ = run(capsys, "shift", write_poly(tmp_path, coeffs), "-d", d)
    assert code == 0
    doc = json.loads(out)
    assert doc["coefficients"] == expected and doc["degree"] == len(coeffs) - 1


@pytest.mark.parametrize("d", ["-1", "0", "0.5", "x"])
def test_shift_bad_d(tmp_path, capsys, d):
    code, _, err = run(capsys, "shift", write_poly(tmp_path, [1, 2, 3]), "-d", d)
    assert code == 2 and err.startswith("error:")


def test_shift_bad_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"degree": 2, "coefficients": ["1", "2"]}')
    assert run(capsys, "shift", str(bad), "-d", "1")[0] == 2
    assert run(capsys, "shift", str(tmp_path / "missing.json"), "-d", "1")[0] == 2
    neg = write_poly(tmp_path, [1, -2, 3], "neg.json")
    assert run(capsys, "shift", neg, "-d", "1")[0] == 2


def test_shift_output_reloads(tmp_path, capsys):
    _, out, _ = run(capsys, "shift", write_poly(tmp_path, [1, 2, 3]), "-d", "1/2")
    again = tmp_path / "out.json"
    again.write_text(out)
    code, out2, _ = run(capsys, "shift", str(again), "-d", "1/2")
    assert code == 0
    direct = run(capsys, "shift", write_poly(tmp_path, [1, 2, 3], "q.json"), "-d", "1")[1]
    assert json.loads(out2)["coefficients"] == json.loads(direct)["coefficients"]


def parse_modes(out):
    return dict(line.split(": ", 1) for line in out.splitlines() if ": " in line)


def test_modes_q4(tmp_path, capsys):
    code, out, _ = run(capsys, "modes", write_poly(tmp_path, [1] * 5), "-d", "1", "--predict")
    fields = parse_modes(out)
    assert code == 0
    assert fields["modes"] == "{1,2}" and fields["m_bar"] == "2"
    assert fields["rule"] == "Prop3.3"
    assert out.rstrip().endswith("AGREE")


def test_modes_power(tmp_path, capsys):
    code, out, _ = run(capsys, "modes", write_poly(tmp_path, [0] * 5 + [1]), "-d", "1", "--predict")
    fields = parse_modes(out)
    assert code == 0
    assert fields["modes"] == "{2,3}" and fields["rule"] == "Prop3.1"
    assert out.rstrip().endswith("AGREE")


def test_modes_plain(tmp_path, capsys):
    code, out, _ = run(capsys, "modes", write_poly(tmp_path, [1, 2, 3]), "-d", "1/2")
    fields = parse_modes(out)
    assert code == 0
    assert fields["modes"] == "{1}" and fields["m_bar"] == "1"
    assert fields["coefficients"] == "11/4, 5, 3"
    assert "rule" not in fields


def test_modes_reports_disagreement(tmp_path, capsys):
    code, out, _ = run(capsys, "modes", write_poly(tmp_path, [0, 0, 1, 1, 1, 1, 1]), "-d", "1", "--predict")
    assert code == 0
    assert "DISAGREE" in out and parse_modes(out)["modes"] == "{2,3}"


def test_modes_bad_d(tmp_path, capsys):
    assert run(capsys, "modes", write_poly(tmp_path, [1, 1]), "-d", "-1")[0] == 2


def test_verify_theorem(tmp_path, capsys):
    out_path = tmp_path / "rep.json"
    code, out, _ = run(capsys, "verify", "--claim", "Thm5.1", "--m-max", "40", "--out", str(out_path))
    assert code == 0 and "ok" in out
    doc = json.loads(out_path.read_text())
    assert doc["kind"] == "sweep" and doc["reports"][0]["failures"] == []
    code, out, _ = run(capsys, "replay", str(out_path))
    assert code == 0 and "identical" in out


def test_verify_unknown_claim(capsys):
    assert run(capsys, "verify", "--claim", "Nope")[0] == 2


def test_verify_failure_exits_one(tmp_path, capsys):
    out_path = tmp_path / "rep.json"
    code, out, _ = run(
        capsys, "verify", "--claim", "Cor4.3", "--m-min", "2", "--m-max", "12", "--d-grid", "1", "--trials", "10", "--out", str(out_path)
    )
    assert code == 1 and "FAILURES" in out
    failure = json.loads(out_path.read_text())["reports"][0]["failures"][0]
    assert failure["status"] == "fail" and failure["witness"]
    assert run(capsys, "replay", str(out_path))[0] == 0


def test_replay_detects_tampering(tmp_path, capsys):
    out_path = tmp_path / "rep.json"
    run(capsys, "verify", "--claim", "Eq2", "--m-max", "6", "--out", str(out_path))
    doc = json.loads(out_path.read_text())
    doc["reports"][0]["digest"] = "0" * 64
    out_path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "replay", str(out_path))
    assert code == 1 and "DIVERGED" in out


def test_scan_q4(tmp_path, capsys):
    out_path = tmp_path / "scan.json"
    code, out, _ = run(capsys, "scan-conjecture", write_poly(tmp_path, [1] * 5), "--d-grid", "1/2,1,2,4", "--out", str(out_path))
    assert code == 0
    assert "M_lo: 2,1,1,0" in out
    code, out, _ = run(capsys, "replay", str(out_path))
    assert code == 0 and "identical" in out


def test_scan_power(tmp_path, capsys):
    assert run(capsys, "scan-conjecture", write_poly(tmp_path, [0, 0, 0, 1]), "--d-grid", "1/2,1")[0] == 0


@pytest.mark.parametrize("grid", ["2,1", "1,1", "-1,2", "a,b"])
def test_scan_bad_grid(tmp_path, capsys, grid):
    assert run(capsys, "scan-conjecture", write_poly(tmp_path, [1] * 5), f"--d-grid={grid}")[0] == 2


def test_scan_family_replays(tmp_path, capsys):
    out_path = tmp_path / "scan.json"
    code, _, _ = run(
        capsys, "scan-conjecture", "--family", "random", "--m-max", "8", "--count", "15", "--d-grid", "1/4,1,3", "--out", str(out_path)
    )
    assert code in (0, 3)
    assert json.loads(out_path.read_text())["polynomials"] == 15
    assert run(capsys, "replay", str(out_path))[0] == 0


def test_scan_needs_a_source(capsys):
    assert run(capsys, "scan-conjecture", "--d-grid", "1,2")[0] == 2


def test_scan_rejects_decreasing_poly(tmp_path, capsys):
    assert run(capsys, "scan-conjecture", write_poly(tmp_path, [3, 1]), "--d-grid", "1,2")[0] == 2
