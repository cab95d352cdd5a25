import json
import subprocess
import sys

import pytest

from gfsums.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_usage(capsys, *argv):
    with pytest.raises(SystemExit) as info:
        main(list(argv))
    capsys.readouterr()
    return info.value.code


def test_closed_form_text(capsys):
    code, out, _ = run(capsys, "closed-form", "--n", "1", "--r", "2", "--w", "1", "--basis", "gk", "--format", "text")
    assert code == 0
    assert out.strip().endswith("-5·G0 - 8·G1 + (k^2 - 2*k + 5)·Gk + (k^2 - 4*k + 8)·G(k+1)")


def test_closed_form_w3(capsys):
    _, out, _ = run(capsys, "closed-form", "--n", "1", "--r", "1", "--w", "3")
    assert "-9/121·G0 + 30/121·G1" in out
    assert "3^(k+2)/121·(11*k + 1)·Gk" in out and "3^(k+1)/121·(11*k - 10)·G(k+1)" in out


@pytest.mark.parametrize(
    "argv, message",
    [
        (["closed-form", "--n", "2", "--r", "0", "--w", "-1"], "singular weight"),
        (["closed-form", "--n", "4", "--w", "1"], "singular weight"),
        (["genfunc", "--w", "2"], "divergent weight"),
        (["genfunc", "--n", "2", "--w", "1/2"], "divergent weight"),
        (["bench", "--n", "2", "--w", "-1", "--k-list", "3"], "singular weight"),
    ],
)
def test_weight_errors_exit_3(capsys, argv, message):
    code, out, err = run(capsys, *argv)
    assert code == 3
    assert message in err and out == ""


def test_analytic_override(capsys):
    code, out, _ = run(capsys, "genfunc", "--w", "2", "--analytic", "--format", "json")
    assert code == 0
    assert json.loads(out)["meta"]["divergent"] is True


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--max-k", "-1"],
        ["closed-form", "--w", "1.5"],
        ["closed-form", "--n", "2", "--basis", "gk"],
        ["eval", "--w", "1"],
        ["eval", "--w", "symbolic", "--k", "3"],
        ["paper-table", "--only", "no-such-id"],
        ["bench", "--k-list", "5,-2"],
        ["frobnicate"],
        ["closed-form", "--unknown-flag"],
        ["split", "--w", "i"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run_usage(capsys, *argv) == 2


def test_eval_formats(capsys):
    code, out, _ = run(capsys, "eval", "--r", "1", "--k", "5")
    assert code == 0 and out == "46\n"
    _, out, _ = run(capsys, "eval", "--k-list", "0,10", "--format", "csv")
    assert out == "k,value\n0,0\n10,143\n"
    _, out, _ = run(capsys, "eval", "--w", "i", "--k", "2", "--seeds", "2,1", "--format", "json")
    assert json.loads(out)["values"] == [{"k": 2, "value": "-1+i"}]


def test_paper_table(capsys):
    code, out, _ = run(capsys, "paper-table")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1].endswith("identities reproduced")
    assert sum(line.startswith("PASS") for line in lines) >= 20
    code, out, _ = run(capsys, "paper-table", "--only", "j5-sum")
    assert out.splitlines()[0] == "PASS  j5-sum"


def test_paper_table_fault(capsys, tmp_path):
    from gfsums.golden import load_corpus

    entries = []
    for e in load_corpus():
        d = {"id": e.id, "kind": e.kind, "params": e.params, "expected": e.expected}
        if e.id == "three-j1-sum":
            d["expected"]["tail"][0]["poly_k"][1] = "12/121"
        entries.append(d)
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps({"entries": entries}), encoding="utf-8")
    code, out, _ = run(capsys, "paper-table", "--corpus", str(path), "--format", "json")
    assert code == 1
    report = json.loads(out)
    failed = [e for e in report["entries"] if e["status"] == "fail"]
    assert [e["id"] for e in failed] == ["three-j1-sum"]
    assert failed[0]["diff"] == [{"term": "tail[0].k^1", "expected": "12/121", "actual": "1/11"}]


def test_verify_small_and_gaussian(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "2", "--max-r", "1", "--max-k", "6", "--format", "text")
    assert code == 0 and out.startswith("pass ")
    code, out, _ = run(capsys, "verify", "--w-grid", "i,-i", "--max-n", "3", "--max-r", "2", "--max-k", "10")
    assert code == 0
    assert json.loads(out)["summary"]["fail"] == 0


def test_split_formats(capsys):
    _, out, _ = run(capsys, "split", "--n", "2", "--format", "json")
    data = json.loads(out)
    assert data["even"]["head"][0] == {"j": 0, "coeff": "5/6"}
    _, out, _ = run(capsys, "split", "--format", "latex")
    assert out.count(r"\sum") == 2


def test_closed_form_formats(capsys):
    for fmt in ("text", "latex", "json", "csv"):
        code, out, _ = run(capsys, "closed-form", "--n", "2", "--w", "symbolic", "--format", fmt)
        assert code == 0 and out
    _, out, _ = run(capsys, "closed-form", "--format", "csv")
    assert out.splitlines()[0] == "part,index,w_exp_offset,k_degree,coeff"


def test_bench_report(capsys):
    code, out, _ = run(capsys, "bench", "--k-list", "0,50", "--r", "2")
    assert code == 0
    data = json.loads(out)
    assert [row["equal"] for row in data["results"]] == [True, True]
    assert set(data["results"][0]["timing"]) == {"closed_form_s", "brute_force_s", "speedup"}
    _, out, _ = run(capsys, "bench", "--k-list", "0", "--format", "csv")
    assert out.splitlines()[1].startswith("0,True,")


def test_out_file(capsys, tmp_path):
    target = tmp_path / "cf.json"
    code, out, _ = run(capsys, "closed-form", "--r", "5", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["head"][0]["coeff"] == "2671"


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "gfsums", *argv], capture_output=True, check=False)


def test_output_is_byte_identical_across_runs():
    for argv in (["closed-form", "--n", "3", "--r", "2", "--w", "1/2", "--format", "json"], ["paper-table"], ["split", "--n", "3"]):
        first, second = _cli(*argv), _cli(*argv)
        assert first.returncode == 0
        assert first.stdout == second.stdout
