import json

import pytest

from cli import EXIT_ERROR, EXIT_OK, EXIT_VERIFY_FAILED, main, split_sources
from pool_storage.BuiltinCatalog import golden_recombinations
from pool_storage.PoolStorage import load_pool
from pool_storage.RecordStorage import read_records
from tests.conftest import RECOMB_4096_B, ROW0_NAME, WINNER_LISTING, WINNER_NAME


def test_split_sources_keeps_names_whole():
    assert split_sources("row:5,row:2,row:1") == ["row:5", "row:2", "row:1"]
    assert split_sources(f"row:5, {WINNER_NAME},r20.a") == ["row:5", WINNER_NAME, "r20.a"]


def test_decode(capsys):
    assert main(["decode", "r4097.c"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out == f"{WINNER_NAME}\n{WINNER_LISTING}\n"


def test_decode_error_exits_nonzero(capsys):
    assert main(["decode", "(2, 0, 11, 0, 3)"]) == EXIT_ERROR
    assert "duplicate rule index 0" in capsys.readouterr().err


def test_encode(tmp_path, capsys):
    path = tmp_path / "rules.txt"
    path.write_text(WINNER_LISTING + "\n", encoding="utf-8")
    assert main(["encode", str(path)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == WINNER_NAME


def test_encode_missing_file(tmp_path):
    assert main(["encode", str(tmp_path / "absent.txt")]) == EXIT_ERROR


def test_run_with_rado(capsys):
    assert main(["run", "(1, 0, 11)", "--rado"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "status: halted" in out
    assert "steps:  1" in out
    assert "class:  M_PP(1)" in out
    assert "rado:   steps 2, ones 2" in out


def test_run_unhalted_with_rado_fails(capsys):
    assert main(["run", "(1, 0, 5)", "--step-limit", "100", "--rado"]) == EXIT_ERROR


def test_diff(capsys):
    assert main(["diff", "row:0", WINNER_NAME]) == EXIT_OK
    out = capsys.readouterr().out
    assert "rule 3 (1, 1): 11 -> 1" in out
    assert "1 differing rules" in out


def test_recombine(capsys):
    assert main(["recombine", "--sources", "row:5,row:2,row:1", "--cuts", "7,9"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == RECOMB_4096_B
    assert lines[1] == "provenance: 0 0 0 0 0 0 0 1 1 2"


def test_recombine_bad_cuts():
    assert main(["recombine", "--sources", "row:5,row:2", "--cuts", "12"]) == EXIT_ERROR


def test_lineage(capsys):
    assert main(["lineage", "[recomb cuts=(9) [recomb cuts=(7) [row:5] [row:2]] [row:1]]"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines()[1] == RECOMB_4096_B


def test_catalog_export(tmp_path):
    path = tmp_path / "golden.txt"
    assert main(["catalog", "--golden", "--export", str(path)]) == EXIT_OK
    assert load_pool(path) == golden_recombinations()


def test_catalog_print(capsys):
    assert main(["catalog"]) == EXIT_OK
    assert f"row:0, {ROW0_NAME}, Marxen-Buntrock,4097,47176869" in capsys.readouterr().out


def test_search_writes_records(tmp_path, capsys):
    out = tmp_path / "found.jsonl"
    code = main(["search", "--pool", "golden", "--select", "r20.a,r20.b", "--k", "2",
                 "--step-limit", "10000", "--out", str(out), "--count-provenance"])
    assert code == EXIT_OK
    records = read_records(out)
    assert records
    assert sum(record.provenance_count for record in records) == 40
    assert "enumerated 40" in capsys.readouterr().err


def test_search_unknown_select():
    assert main(["search", "--select", "row:77"]) == EXIT_ERROR


def test_builtin_search_with_other_state_count():
    assert main(["search", "--states", "3", "--select", "row:10", "--k", "1"]) == EXIT_ERROR


def test_verify_low_cap_fails(capsys):
    assert main(["verify", "--cap", "1000", "--json"]) == EXIT_VERIFY_FAILED
    out = capsys.readouterr().out
    report = json.loads(out[out.index("{"):])
    assert report["cap"] == 1000


def test_verify_pool_file(tmp_path, capsys):
    path = tmp_path / "small.txt"
    path.write_text("w, (9, 0, 11, 1, 5, 2, 15, 3, 23, 4, 3, 5, 15, 7, 29, 8, 15, 9, 8), , 20, 279\n",
                    encoding="utf-8")
    assert main(["verify", "--pool", str(path)]) == EXIT_OK
    assert "1 PASS, 0 FAIL" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [[], ["nope"]])
def test_bad_usage(argv):
    with pytest.raises(SystemExit):
        main(argv)
