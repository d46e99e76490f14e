import json

import pytest

from whitehouse.cli import main, parse_range


def test_parse_range():
    assert parse_range("2..5") == [2, 3, 4, 5]
    assert parse_range("3,5") == [3, 5]
    with pytest.raises(Exception):
        parse_range("5..2")


def test_verify_json_stdout(capsys):
    assert main(["verify", "--n", "2..3", "--checks", "eulerian,u-characters"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 4
    assert all(json.loads(x)["status"] == "pass" for x in lines)


def test_verify_out_dir(tmp_path, capsys):
    assert main(["verify", "--n", "3", "--checks", "all", "--out", str(tmp_path),
                 "--format", "csv", "--cache", str(tmp_path / "cache")]) == 0
    assert (tmp_path / "report.csv").read_text().startswith("check,n,status")
    assert "0 failing" in capsys.readouterr().out


def test_verify_text(capsys):
    assert main(["verify", "--n", "2", "--format", "text"]) == 0
    assert "quotient-comparison" in capsys.readouterr().out


def test_bad_check_name():
    with pytest.raises(SystemExit):
        main(["verify", "--checks", "bogus"])


def test_tables(capsys):
    assert main(["tables", "--n", "3"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "irrep,3,2.1,1.1.1"


def test_tables_file(tmp_path):
    main(["tables", "--n", "4", "--out", str(tmp_path)])
    assert len((tmp_path / "characters_S4.csv").read_text().splitlines()) == 6


@pytest.mark.parametrize("alg,dims", [("U", [1, 3, 2]), ("M", [1, 1]), ("V", [1, 1])])
def test_dump(capsys, alg, dims):
    assert main(["dump", "--n", "3", "--algebra", alg]) == 0
    recs = [json.loads(x) for x in capsys.readouterr().out.split("\n") if x]
    assert [len(r["basis"]) for r in recs] == dims
    assert all(r["algebra"] == alg for r in recs)
