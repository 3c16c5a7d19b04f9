import json
import subprocess
import sys

import pytest

from jacobsthal3.bfile import BFileRow, format_bfile, parse_bfile
from jacobsthal3.cli import main
from jacobsthal3.exceptions import BFileParseError

from conftest import brute_terms


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("argv,shown", [
    (["term", "--seq", "J3", "--n", "5"], "9"),
    (["term", "--seq", "J3", "--n", "-2"], "1/2"),
    (["term", "--seq", "V3", "--n", "1"], "-3"),
    (["term", "--seq", "j3", "--n", "4", "--method", "cyclotomic"], "17"),
    (["term", "--seq", "J3", "--n", "-3", "--method", "binet"], "-1/4"),
])
def test_term(capsys, argv, shown):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == shown


def test_term_json_and_csv(capsys):
    code, out, _ = run(capsys, "--format", "json", "term", "--seq", "j3", "--n", "4")
    assert code == 0 and json.loads(out)["value"] == "17"
    code, out, _ = run(capsys, "term", "--seq", "J3", "--n", "6", "--format", "csv")
    assert out.splitlines() == ["seq,n,method,value", "J3,6,recurrence,18"]


def test_matrix_csv(capsys):
    code, out, _ = run(capsys, "matrix", "--family", "J", "--n", "2", "--format", "csv")
    assert code == 0
    # corrected second seed; the printed table reads "1,3,2" in the first row
    assert out.splitlines() == ["c1,c2,c3", "2,3,2", "1,1,2", "1,0,0"]


def test_matrix_text_and_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "matrix", "--family", "j", "--n", "0")
    assert json.loads(out)["matrix"] == [["1", "4", "4"], ["2", "-1", "2"], ["1", "1", "-2"]]
    code, out, _ = run(capsys, "matrix", "--family", "J", "--n", "0")
    assert code == 0
    assert [line.split() for line in out.splitlines()] == [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]
    seen = []
    for method in ("recurrence", "explicit", "power", "binet"):
        code, out2, _ = run(capsys, "--format", "json", "matrix", "--family", "J", "--n", "-5", "--method", method)
        assert code == 0
        seen.append(json.loads(out2)["matrix"])
    assert all(m == seen[0] for m in seen)
    assert any("/" in v for row in seen[0] for v in row)


def test_verify_all_json(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--min", "0", "--max", "50", "--format", "json")
    assert code == 0
    records = json.loads(out)
    assert isinstance(records, list) and len(records) > 30
    assert all(r["matches_expected"] for r in records)
    assert {r["id"] for r in records if r["status"] == "FAIL"} == {"thm2.4-J", "thm2.4-j", "cor3.5"}


def test_verify_single(capsys):
    assert run(capsys, "verify", "--id", "eq04", "--min", "-10", "--max", "10")[0] == 0
    code, out, _ = run(capsys, "verify", "--id", "cor3.5", "--min", "1", "--max", "5")
    assert code == 0  # fails as printed, which is what is expected
    assert "FAIL" in out and "lhs=34 rhs=145" in out


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "--id", "thm2.4-J", "--x", "2")[0] == 2
    assert run(capsys, "verify", "--id", "thm2.4-J", "--x", "0")[0] == 2
    assert run(capsys, "verify", "--id", "thm2.4-J", "--x", "abc")[0] == 2
    assert run(capsys, "verify", "--id", "nope")[0] == 2
    assert run(capsys, "verify")[0] == 2
    assert run(capsys, "verify", "--id", "eq04", "--min", "5", "--max", "1")[0] == 2
    assert run(capsys, "verify", "--id", "thm2.5-J", "--m", "4", "--r", "1")[0] == 2


def test_sum_t3(capsys):
    code, out, _ = run(capsys, "--format", "json", "sum", "--kind", "t3", "--family", "J", "--x", "1", "--n", "1")
    assert code == 0
    rec = json.loads(out)
    assert rec["direct"][0][0] == "2"
    assert rec["closed_forms"]["corrected"][0][0] == "2"
    assert rec["closed_forms"]["printed"][0][0] == "-2"
    assert rec["equal"] == {"corrected": True, "printed": False}


def test_sum_t4(capsys):
    code, out, _ = run(capsys, "--format", "json", "sum", "--kind", "t4", "--family", "J",
                       "--m", "1", "--r", "1", "--n", "1")
    rec = json.loads(out)
    assert code == 0
    assert rec["direct"][0][0] == "3" == rec["closed_forms"]["printed"][0][0]
    code, _, err = run(capsys, "sum", "--kind", "t4", "--family", "J", "--m", "3", "--r", "3", "--n", "0")
    assert code == 2 and "sigma(m)=0" in err


def test_sum_usage(capsys):
    assert run(capsys, "sum", "--kind", "t3", "--n", "1")[0] == 2
    assert run(capsys, "sum", "--kind", "t3", "--x", "2", "--n", "1")[0] == 2
    assert run(capsys, "sum", "--kind", "t3", "--x", "1", "--n", "-1")[0] == 2
    assert run(capsys, "sum", "--kind", "t5", "--n", "1")[0] == 2


@pytest.mark.parametrize("n", [0, 1, 1000])
def test_bench(capsys, n):
    code, out, _ = run(capsys, "--format", "json", "bench", "--n", str(n), "--reps", "3")
    rec = json.loads(out)
    assert code == 0 and rec["agreement"] is True
    assert rec["multiplications"] <= rec["multiplication_bound"] or n <= 1
    assert len(rec["timings"]) >= 3


def test_bench_skips_linear_routes(capsys):
    code, out, _ = run(capsys, "--format", "json", "bench", "--n", "5000", "--max-linear", "100")
    rec = json.loads(out)
    assert code == 0 and rec["agreement"] and "matrix.recurrence" in rec["skipped"]


def test_bad_args_exit_2(capsys):
    assert run(capsys, "term", "--seq", "X", "--n", "1")[0] == 2
    assert run(capsys, "term", "--seq", "J3")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "bench", "--n", "-1")[0] == 2


# -- b-files and crosscheck ---------------------------------------------------------

def test_bfile_parse_and_format():
    text = format_bfile([(0, 0), (1, 1), (2, 1)], header="J3 terms")
    assert text.startswith("# J3 terms\n")
    assert parse_bfile(text.splitlines()) == [BFileRow(0, 0), BFileRow(1, 1), BFileRow(2, 1)]
    assert parse_bfile(["", "# c", "  5   7  "]) == [BFileRow(5, 7)]
    with pytest.raises(BFileParseError) as err:
        parse_bfile(["0 0", "1 x"])
    assert err.value.lineno == 2
    with pytest.raises(BFileParseError) as err:
        parse_bfile(["0 0", "2 1", "1 1"])
    assert err.value.lineno == 3


def write(tmp_path, text, name="b.txt"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_crosscheck_examples(tmp_path, capsys):
    good = write(tmp_path, "0 0\n1 1\n2 1\n3 2\n4 5\n")
    assert run(capsys, "crosscheck", good, "--seq", "J3")[0] == 0
    bad = write(tmp_path, "0 0\n1 1\n2 1\n3 2\n4 6\n", "bad.txt")
    code, out, _ = run(capsys, "--format", "json", "crosscheck", bad, "--seq", "J3")
    assert code == 1
    assert json.loads(out)["mismatches"] == [{"index": 4, "n": 4, "file": "6", "computed": "5"}]
    empty = write(tmp_path, "", "empty.txt")
    code, out, _ = run(capsys, "--format", "json", "crosscheck", empty, "--seq", "J3")
    assert code == 0 and json.loads(out)["compared"] == 0


def test_crosscheck_offset_and_v3(tmp_path, capsys):
    terms = brute_terms("J3", 0, 20)
    path = write(tmp_path, format_bfile((n + 1, int(terms[n])) for n in range(21)))
    assert run(capsys, "crosscheck", path, "--seq", "J3", "--offset", "-1")[0] == 0
    assert run(capsys, "crosscheck", path, "--seq", "J3")[0] == 1
    v = write(tmp_path, "0 2\n1 -3\n2 1\n3 2\n", "v.txt")
    assert run(capsys, "crosscheck", v, "--seq", "V3")[0] == 0


def test_crosscheck_errors(tmp_path, capsys):
    assert run(capsys, "crosscheck", str(tmp_path / "missing"), "--seq", "J3")[0] == 2
    bad = write(tmp_path, "0 0\nzzz\n")
    code, _, err = run(capsys, "crosscheck", bad, "--seq", "J3")
    assert code == 2 and "line 2" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "jacobsthal3", "term", "--seq", "J3", "--n", "10"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == str(int(brute_terms("J3", 10, 10)[10]))
