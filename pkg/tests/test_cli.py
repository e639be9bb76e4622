import json
import subprocess
import sys

import pytest

from seqcorr.cli import InputError, main, parse_sequence
from seqcorr.sequences import SequenceSpec


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def files(tmp_path, capsys):
    paths = {}
    for name, args in {
        "l7": ["legendre", "--p", "7"],
        "l13": ["legendre", "--p", "13"],
        "m3": ["mseq", "--poly", "1011"],
        "m4": ["mseq", "--poly-expr", "x^4+x^3+1"],
        "m4b": ["mseq", "--poly", "11001"],
        "ls11": ["lseq", "--p", "11"],
    }.items():
        path = tmp_path / f"{name}.txt"
        assert run(capsys, "gen", *args, "-o", str(path))[0] == 0
        paths[name] = str(path)
    return paths


@pytest.mark.parametrize(
    "args, bits",
    [
        (["legendre", "--p", "7"], "0110100"),
        (["mseq", "--poly", "1011"], "1001110"),
        (["mseq", "--poly-expr", "x^3+x^2+1", "--seed", "011"], "0111010"),
        (["lseq", "--p", "5"], "1100"),
        (["literal", "--bits", "0011"], "0011"),
    ],
)
def test_gen_stdout_round_trip(capsys, args, bits):
    code, out, err = run(capsys, "gen", *args)
    assert code == 0
    header, body = out.splitlines()
    assert body == bits and header.startswith(f"# period={len(bits)} kind=")
    assert parse_sequence(out).to_string() == bits
    assert "period=" in err
    spec = header.split("kind=", 1)[1]
    if spec != "literal":
        assert SequenceSpec.parse(spec).build().to_string() == bits


def test_gen_file_summary(tmp_path, capsys):
    path = tmp_path / "s.txt"
    code, out, _ = run(capsys, "gen", "legendre", "--p", "11", "-o", str(path))
    assert code == 0 and out.strip() == "period=11 ones=5 balanced=yes"
    assert path.read_text() == "# period=11 kind=legendre(p=11)\n01011100010\n"


@pytest.mark.parametrize(
    "args",
    [
        ["gen", "lseq", "--p", "7"],  # 2 is not a primitive root mod 7
        ["gen", "legendre", "--p", "9"],
        ["gen", "mseq", "--poly", "1111"],
        ["gen", "mseq"],
        ["gen", "mseq", "--poly", "1011", "--seed", "000"],
        ["gen", "literal", "--bits", "012"],
    ],
)
def test_gen_bad_input_exits_2(capsys, args):
    code, _, err = run(capsys, *args)
    assert code == 2 and err.startswith("seqcorr: error:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "theorem4", "--n", "a..b"])
    assert info.value.code == 2


def test_parse_sequence_errors():
    with pytest.raises(InputError):
        parse_sequence("# period=4\n011\n")
    with pytest.raises(InputError):
        parse_sequence("01\n10\n")
    with pytest.raises(InputError):
        parse_sequence("# period=x\n01\n")
    assert parse_sequence("\n# comment\n0101\n").period == 4


def test_corr_single_lag(files, capsys):
    assert run(capsys, "corr", files["l7"], files["l13"])[1].strip() == "5"
    code, out, _ = run(capsys, "corr", files["m3"], files["m4"], "--kind", "classical", "--lag", "3", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "tau,value" and out.splitlines()[1].startswith("3,")


def test_corr_all_formats_agree(files, capsys):
    _, text, _ = run(capsys, "corr", files["l7"], files["l13"], "--all")
    _, csv_out, _ = run(capsys, "corr", files["l7"], files["l13"], "--all", "--format", "csv")
    _, js, _ = run(capsys, "corr", files["l7"], files["l13"], "--all", "--format", "json", "--jobs", "3")
    text_vals = [int(line.split("\t")[1]) for line in text.splitlines()]
    csv_vals = [int(line.split(",")[1]) for line in csv_out.splitlines()[1:]]
    report = json.loads(js)
    assert text_vals == csv_vals == report["results"]["values"]
    assert set(text_vals) == {5} and len(text_vals) == 91
    assert set(report) == {"schema", "command", "parameters", "status", "results", "timing_ms"}


def test_corr_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "corr", str(tmp_path / "nope"), str(tmp_path / "nope2"))
    assert code == 2 and "cannot read" in err


def test_verify_pass_and_json_deterministic(capsys):
    code, out, _ = run(capsys, "verify", "theorem4", "--n", "3..6")
    assert code == 0 and out.startswith("theorem4: PASS")
    reports = []
    for _ in range(2):
        code, out, _ = run(capsys, "verify", "lemma3", "--n", "3,4", "--format", "json")
        assert code == 0
        r = json.loads(out)
        r.pop("timing_ms")
        reports.append(r)
    assert reports[0] == reports[1] and reports[0]["status"] == "pass"


def test_verify_informational_suite(capsys):
    code, out, _ = run(capsys, "verify", "cross_ratio", "--max-degree", "5")
    assert code == 0 and "cross_ratio: INFO" in out


def test_verify_failure_exits_1(capsys, monkeypatch):
    from seqcorr import analysis

    monkeypatch.setattr(analysis, "m_auto_bound", lambda n, tau: -1)
    code, out, _ = run(capsys, "verify", "theorem4", "--n", "3")
    assert code == 1 and "FAIL" in out and "[FAILED]" in out


def test_tables(capsys):
    code, out, _ = run(capsys, "tables", "1")
    assert code == 0 and "table 1: 8/8 rows match" in out
    code, out, _ = run(capsys, "tables", "2", "--format", "csv", "--spot-lags", "2")
    assert code == 0 and out.splitlines()[0] == "table,row,expected,computed,match"
    # the noncoprime arithmetic value set only matches with the pair exchanged
    code, out, _ = run(capsys, "tables", "noncoprime", "--format", "json")
    assert code == 1 and json.loads(out)["status"] == "fail"


def test_patterns(files, capsys):
    code, out, _ = run(capsys, "patterns", files["l7"], files["m4b"], "--k", "0", "--format", "csv")
    rows = out.splitlines()
    assert code == 0 and rows[0] == "pattern,count" and len(rows) == 5
    assert sum(int(r.split(",")[1]) for r in rows[1:]) == 105
    code, out, _ = run(capsys, "patterns", files["m4"], "--tau", "1", "--k", "0")
    assert dict(line.split("\t") for line in out.splitlines()) == {"00": "3", "01": "4", "10": "4", "11": "4"}
    code, out, _ = run(capsys, "patterns", files["m4"], "--tau", "1", "--k", "1", "--variant", "contiguous", "--format", "json")
    assert code == 0 and len(json.loads(out)["results"]) == 8


@pytest.mark.parametrize(
    "extra",
    [["--k", "0"], ["--k", "0", "--tau", "1", "T"], ["--tau", "9", "--k", "0"]],
)
def test_patterns_bad_usage(files, capsys, extra):
    if "T" in extra:
        extra = [files["m3"] if x == "T" else x for x in extra]
        args = ["patterns", files["m4"], extra[-1]] + extra[:-1]
    else:
        args = ["patterns", files["m4"]] + extra
    assert run(capsys, *args)[0] == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "seqcorr", "gen", "legendre", "--p", "5"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.splitlines()[1] == "01001"
