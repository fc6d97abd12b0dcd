import json
import subprocess
import sys

import pytest

from bsize import tables
from bsize.cli import (
    EXIT_CHECKPOINT,
    EXIT_NO_BASE,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFY_FAILED,
    main,
)
from bsize.tables import TableSpec


@pytest.fixture(autouse=True)
def cache_file(tmp_path, monkeypatch):
    path = tmp_path / "results.csv"
    monkeypatch.setenv("BSIZE_CACHE", str(path))
    return path


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute(capsys, cache_file):
    code, out, _ = run(capsys, "compute", "--n", "6", "--k", "3")
    assert code == EXIT_OK and out == "b(6,3) = 3\n"
    assert cache_file.read_text() == "6,3,3\n"
    code, out, _ = run(capsys, "compute", "--n", "10", "--k", "2", "--no-cache")
    assert out == "b(10,2) = 6\n"
    assert "10,2" not in cache_file.read_text()


def test_compute_uses_cache(capsys, cache_file):
    cache_file.write_text("7,3,99\n")
    assert run(capsys, "compute", "--n", "7", "--k", "4")[1] == "b(7,4) = 99\n"
    assert run(capsys, "compute", "--n", "7", "--k", "4", "--no-cache")[1] == "b(7,4) = 3\n"


def test_compute_trace_and_json(capsys):
    code, out, _ = run(capsys, "compute", "--n", "6", "--k", "3", "--trace", "--l", "4")
    lines = out.splitlines()
    assert lines[0] == "b(6,3) = 3"
    assert lines[1:4] == ["  l=1 h=0", "  l=2 h=0", "  l=3 h=2880"]
    assert lines[4].startswith("h_4(6,3) = ")
    code, out, _ = run(capsys, "compute", "--n", "6", "--k", "3", "--json")
    doc = json.loads(out)
    assert doc == {"n": 6, "k": 3, "b": 3, "method": "partition-formula",
                   "trace": [[1, "0"], [2, "0"], [3, "2880"]]}


def test_compute_weights(capsys):
    code, out, _ = run(capsys, "compute", "--n", "3", "--k", "1", "--weights", "--no-cache")
    assert out.splitlines()[1:] == ["m,w", "0,2", "1,-3", "3,1"]


def test_compute_errors(capsys):
    code, _, err = run(capsys, "compute", "--n", "3", "--k", "3")
    assert code == EXIT_NO_BASE and "no base exists" in err
    code, _, err = run(capsys, "compute", "--n", "1", "--k", "1")
    assert code == EXIT_USAGE and "n must be" in err
    code, _, err = run(capsys, "compute", "--n", "5", "--k", "9")
    assert code == EXIT_USAGE and "k must lie" in err
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--n", "five", "--k", "1"])
    assert exc.value.code == EXIT_USAGE


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--kmax", "5", "--format", "csv")
    rows = out.splitlines()
    assert rows[0] == "n,k,b"
    assert "6,3,3" in rows and "10,5,4" in rows
    assert "7,3,3" not in rows   # closed-form region is omitted


def test_table_text_k3(capsys):
    code, out, _ = run(capsys, "table", "--kmax", "3")
    lines = out.splitlines()
    assert lines[0].split() == ["n\\k", "|", "3"]
    assert [ln.split() for ln in lines[2:]] == [["6", "|", "3"]]


def test_table_text_dashes(capsys):
    out = run(capsys, "table", "--kmax", "4")[1].splitlines()
    body = {int(ln.split("|")[0]): ln.split("|")[1].split() for ln in out[2:]}
    assert body == {6: ["3"], 7: ["-"], 8: ["-", "3"], 9: ["-", "4"], 10: ["-", "4"]}


def test_table_fill_closed_form(capsys):
    out = run(capsys, "table", "--kmax", "4", "--fill-closed-form", "--format", "json")[1]
    cells = {(c["n"], c["k"]): c for c in json.loads(out)["cells"]}
    assert cells[(9, 3)]["b"] == 4 and cells[(9, 3)]["method"] == "halasi-closed-form"
    assert cells[(8, 4)]["method"] == "partition-formula"


def test_table_explicit_range(capsys):
    out = run(capsys, "table", "--kmin", "1", "--kmax", "2", "--nmin", "2", "--nmax", "8",
              "--format", "csv")[1]
    rows = [tuple(map(int, r.split(","))) for r in out.splitlines()[1:]]
    assert rows == [(n, k, b) for n in range(2, 9) for k, b in ((1, n - 1), (2, -(-2 * (n - 1) // 3)))
                    if 2 * k <= n]


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_table_roundtrip(capsys, fmt):
    out = run(capsys, "table", "--kmax", "6", "--fill-closed-form", "--format", fmt)[1]
    spec = TableSpec(3, 6, fill_closed_form=True)
    if fmt == "csv":
        assert tables.render_csv(tables.parse_csv(out)) == out
    else:
        cells, parsed = tables.parse_json(out)
        assert tables.render_json(cells, parsed) == out
        assert parsed.k_max == spec.k_max


def test_table_matches_golden_prefix(capsys, golden_table):
    out = run(capsys, "table", "--nmax", "30", "--format", "csv")[1]
    want = [r for r in golden_table if r[0] <= 30]
    got = [tuple(map(int, r.split(","))) for r in out.splitlines()[1:]]
    assert got == want


def test_table_checkpoint_dir(capsys, tmp_path):
    cpdir = tmp_path / "rows"
    cpdir.mkdir()
    out = run(capsys, "table", "--kmax", "6", "--format", "csv", "--no-cache",
              "--checkpoint-dir", str(cpdir))[1]
    assert sorted(p.name for p in cpdir.iterdir())[0] == "row-10.json"
    again = run(capsys, "table", "--kmax", "6", "--format", "csv", "--no-cache",
                "--checkpoint-dir", str(cpdir))[1]
    assert again == out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--nmax", "6")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "all suites passed"
    assert "generation   PASS" in out and "skipped n=6" in out
    code, out, _ = run(capsys, "verify", "--suite", "graphs", "--nmax", "5")
    assert code == EXIT_OK and out.startswith("graphs       PASS  18 checks")


def test_verify_failure_exit(capsys, monkeypatch):
    from bsize import verify

    def broken(nmax):
        rep = verify.SuiteReport("broken")
        verify._expect(rep, 1, 2, "deliberate")
        return rep

    monkeypatch.setitem(verify.SUITES, "classes", broken)
    code, out, _ = run(capsys, "verify", "--suite", "classes", "--nmax", "2")
    assert code == EXIT_VERIFY_FAILED and "FAIL" in out


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--n", "40", "--k", "8")
    assert code == EXIT_OK
    assert "partitions processed: 37338" in out
    assert out.splitlines()[-1] == "b(40,8) = 9"


def test_bench_checkpoint_resume(capsys, tmp_path):
    cp = tmp_path / "cp.json"
    run(capsys, "bench", "--n", "20", "--k", "5", "--checkpoint", str(cp))
    doc = json.loads(cp.read_text())
    assert doc["n"] == 20 and doc["visited"] == 627 and len(doc["completed_chunks"]) == 20
    code, out, _ = run(capsys, "bench", "--n", "20", "--k", "5", "--resume", str(cp))
    assert code == EXIT_OK and "b(20,5) = 7" in out
    cp.write_text('{"format": "bsize-checkpoint", "version": 0}')
    code, _, err = run(capsys, "bench", "--n", "20", "--k", "5", "--resume", str(cp))
    assert code == EXIT_CHECKPOINT and "version" in err


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "bsize", "compute", "--n", "8", "--k", "4",
                           "--no-cache"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "b(8,4) = 3\n"
