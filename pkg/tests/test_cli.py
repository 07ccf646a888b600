import io
import json

import pytest

from ghzent.cli import BENCH_CSV_HEADER, main
from ghzent.state import load_state

PURE_GHZ_3 = '{"n":3,"convention":"canonical","weights":[{"beta":"000","plus":1.0,"minus":0.0}]}'
MIXED_2 = (
    '{"n":2,"convention":"canonical","weights":['
    '{"beta":"00","plus":0.25,"minus":0.25},'
    '{"beta":"01","plus":0.25,"minus":0.25}]}'
)


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_classify_exit_zero_for_fully_entangled(capsys):
    rc, out, _ = run(capsys, "classify", "--input", PURE_GHZ_3)
    assert rc == 0
    assert "fully entangled" in out
    assert "E[000] = -1" in out


def test_classify_exit_one_for_biseparable(capsys):
    rc, out, _ = run(capsys, "classify", "--input", MIXED_2)
    assert rc == 1
    assert "not fully entangled" in out


def test_classify_json_schema(capsys):
    rc, out, _ = run(capsys, "classify", "--input", PURE_GHZ_3, "--format", "json")
    assert rc == 0
    doc = json.loads(out)
    assert doc["n"] == 3
    assert doc["full_entangled"] is True
    assert [p["alpha1"] for p in doc["partitions"]] == ["100", "101", "110"]
    worst = doc["partitions"][0]["worst"]
    assert worst == {"beta": "000", "coeff": "E", "value": -1.0}


def test_classify_exit_two_for_bad_input(capsys):
    rc, _, err = run(capsys, "classify", "--input", '{"n":3}')
    assert rc == 2
    assert "error:" in err
    rc, _, err = run(capsys, "classify")
    assert rc == 2
    rc, _, err = run(capsys, "classify", "--input", "/no/such/file.json")
    assert rc == 2


def test_classify_reads_file_and_stdin(tmp_path, capsys, monkeypatch):
    path = tmp_path / "state.json"
    path.write_text(PURE_GHZ_3)
    rc, out, _ = run(capsys, "classify", "--input", str(path))
    assert rc == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(PURE_GHZ_3))
    rc, out, _ = run(capsys, "classify", "--input", "-")
    assert rc == 0


def test_random_single_state_is_loadable_and_deterministic(capsys):
    rc, out1, _ = run(capsys, "random", "--n", "4", "--seed", "9", "--format", "json")
    assert rc == 0
    rc, out2, _ = run(capsys, "random", "--n", "4", "--seed", "9", "--format", "json")
    assert out1 == out2
    state = load_state(out1)
    assert state.n == 4


def test_random_count_gives_list(capsys):
    rc, out, _ = run(capsys, "random", "--n", "3", "--seed", "0", "--count", "3", "--format", "json")
    assert rc == 0
    docs = json.loads(out)
    assert isinstance(docs, list) and len(docs) == 3
    # table format emits one compact document per line
    rc, out, _ = run(capsys, "random", "--n", "3", "--seed", "0", "--count", "3")
    lines = out.strip().split("\n")
    assert len(lines) == 3
    for line in lines:
        load_state(line)


def test_threshold_reports_closed_form_for_pure_ghz(capsys):
    rc, out, _ = run(capsys, "threshold", "--input", PURE_GHZ_3, "--format", "json")
    assert rc == 0
    doc = json.loads(out)
    assert doc["full_entanglement_threshold"] == pytest.approx(0.8, abs=1e-12)
    assert doc["ghz_closed_form"] == pytest.approx(0.8, abs=1e-12)
    assert len(doc["partitions"]) == 3
    rc, out, _ = run(capsys, "threshold", "--input", MIXED_2, "--format", "json")
    doc = json.loads(out)
    assert doc["ghz_closed_form"] is None
    assert doc["full_entanglement_threshold"] == 0.0


def test_basis_lists_all_vectors(capsys):
    rc, out, _ = run(capsys, "basis", "--n", "2", "--format", "json")
    assert rc == 0
    rows = json.loads(out)
    assert len(rows) == 4
    assert rows[0]["beta"] == "00" and rows[0]["sign"] == "+"
    assert rows[0]["support"] == [0, 3]
    assert rows[2]["support"] == [1, 2]
    amp = 0.5 ** 0.5
    assert rows[1]["amplitudes"] == pytest.approx([amp, -amp], abs=1e-15)


def test_basis_requires_n(capsys):
    rc, _, err = run(capsys, "basis")
    assert rc == 2
    assert "error:" in err


def test_oracle_check_agrees(capsys):
    rc, out, _ = run(
        capsys, "oracle-check", "--n", "2", "--count", "10", "--seed", "4", "--format", "json"
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["mismatches"] == 0
    assert doc["spectrum_deviation"] < 1e-12
    rc, _, err = run(capsys, "oracle-check", "--n", "9", "--count", "1")
    assert rc == 2


def test_bench_emits_csv(capsys):
    rc, out, _ = run(capsys, "bench", "--count", "1", "--seed", "0")
    assert rc == 0
    lines = out.strip().split("\n")
    assert lines[0] == BENCH_CSV_HEADER
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) == 7 + 5
    analytic = [r for r in rows if r[0] == "analytic_classify"]
    dense = [r for r in rows if r[0] == "dense_partition"]
    assert [int(r[1]) for r in analytic] == list(range(8, 15))
    assert [int(r[1]) for r in dense] == list(range(4, 9))
    for r in rows:
        assert int(r[2]) >= 1
        assert float(r[3]) > 0.0


def test_count_must_be_positive(capsys):
    rc, _, err = run(capsys, "random", "--n", "3", "--count", "0")
    assert rc == 2
    assert "count" in err


def test_unknown_command_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
