import json
from pathlib import Path

import pytest

from luckypark.cli import main, parse_osp, parse_tuple

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.splitlines(), captured.err


def run_json(capsys, *argv):
    code, lines, err = run(capsys, *argv, "--format", "json")
    assert err == ""
    return code, json.loads("\n".join(lines))


# -- parsing helpers ---------------------------------------------------------

def test_parse_tuple():
    assert parse_tuple("3,2,4,4,1") == (3, 2, 4, 4, 1)
    assert parse_tuple("") == ()
    assert parse_tuple(" 7 ") == (7,)
    with pytest.raises(ValueError, match="comma-separated"):
        parse_tuple("1,a")


def test_parse_osp():
    osp = parse_osp("2|3,6,7|4|5,8|1")
    assert osp.n == 8
    assert osp.blocks == ((2,), (3, 6, 7), (4,), (5, 8), (1,))


# -- simulation commands -----------------------------------------------------

def test_park_pretty(capsys):
    code, lines, err = run(capsys, "park", "3,2,4,4,1")
    assert code == 0 and err == ""
    assert lines == ["spots: 3 2 4 5 1", "lucky: 1 2 3 5"]


def test_park_unit_failure(capsys):
    code, lines, _ = run(capsys, "park", "1,1,3,2", "--rule", "unit")
    assert code == 0
    assert lines == ["car 4 cannot park"]


def test_park_json(capsys):
    code, payload = run_json(capsys, "park", "1,5,5,2,3")
    assert code == 0
    assert payload["success"] is False
    assert payload["failed_car"] == 3
    assert payload["lucky"] == [1, 2]
    assert "spots" not in payload


def test_lucky(capsys):
    code, lines, _ = run(capsys, "lucky", "2,2,1", "--rule", "unit")
    assert code == 0
    assert lines == ["lucky: 1 3", "count: 2"]


def test_recognize(capsys):
    code, lines, _ = run(capsys, "recognize", "1,1,4,3", "--family", "ufr")
    assert code == 0
    assert "is a member" in lines[0]
    code, payload = run_json(capsys, "recognize", "1,1,2,3", "--family", "fr")
    assert code == 0  # a negative answer is still a successful run
    assert payload["member"] is False


# -- bijections ----------------------------------------------------------------

def test_bijection_osp_both_ways(capsys):
    code, lines, _ = run(capsys, "bijection", "fr-osp", "8,1,2,5,6,2,2,6")
    assert code == 0
    assert lines == ["2|3,6,7|4|5,8|1"]
    code, lines, _ = run(capsys, "bijection", "osp-fr", "2|3,6,7|4|5,8|1")
    assert code == 0
    assert lines == ["8,1,2,5,6,2,2,6"]


def test_bijection_psi_both_ways(capsys):
    code, lines, _ = run(capsys, "bijection", "psi", "8,1,2,5,6,2,2,6")
    assert code == 0
    assert lines == ["8,1,2,5,6,2,3,6"]
    code, lines, _ = run(capsys, "bijection", "psi-inv", "8,1,2,5,6,2,3,6")
    assert code == 0
    assert lines == ["8,1,2,5,6,2,2,6"]


def test_bijection_compositions(capsys):
    code, lines, _ = run(capsys, "bijection", "ufrinc-comp",
                         "1,1,3,4,4,6,6,8")
    assert code == 0
    assert lines == ["2,1,2,2,1"]
    code, lines, _ = run(capsys, "bijection", "comp-ufrinc", "2,1,2,2,1",
                         "--format", "tsv")
    assert code == 0
    assert lines == ["1 1 3 4 4 6 6 8"]


def test_bijection_rejects_non_member(capsys):
    code, _, err = run(capsys, "bijection", "psi", "1,1,2")
    assert code == 2
    assert "error:" in err


# -- counting ------------------------------------------------------------------

def test_count(capsys):
    code, lines, _ = run(capsys, "count", "--family", "fr", "-n", "4",
                         "-k", "3")
    assert code == 0 and lines == ["36"]
    for method in ("closed", "recurrence", "composition-sum"):
        code, lines, _ = run(capsys, "count", "--family", "fr", "-n", "6",
                             "-k", "4", "--method", method)
        assert code == 0
        assert lines == ["1560"]


def test_count_rejects_pf_at_argparse_level(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--family", "pf", "-n", "3", "-k", "2"])
    assert exc.value.code == 2


def test_count_lucky_set(capsys):
    code, lines, _ = run(capsys, "count-lucky-set", "--family", "fr",
                         "-n", "5", "--set", "1,2,5")
    assert code == 0 and lines == ["24"]
    code, payload = run_json(capsys, "count-lucky-set", "--family", "ufr",
                             "-n", "4", "--set", "1,2,3")
    assert code == 0
    assert payload["count"] == "18"


def test_construct(capsys):
    code, lines, _ = run(capsys, "construct", "--family", "frinc",
                         "-n", "4", "--set", "1,3")
    assert code == 0 and lines == ["1,1,3,3"]
    code, lines, _ = run(capsys, "construct", "--family", "ufrinc",
                         "-n", "4", "--set", "1,3", "--format", "tsv")
    assert code == 0 and lines == ["1 1 3 3"]
    code, _, err = run(capsys, "construct", "--family", "ufrinc",
                       "-n", "4", "--set", "1,4")
    assert code == 2 and "error:" in err


def test_triangle(capsys):
    code, lines, _ = run(capsys, "triangle", "--family", "ufr",
                         "--n-max", "4", "--format", "tsv")
    assert code == 0
    assert lines == ["1", "0\t1", "0\t1\t2", "0\t0\t6\t6", "0\t0\t6\t36\t24"]


def test_triangle_json_counts_are_strings(capsys):
    code, payload = run_json(capsys, "triangle", "--family", "fr",
                             "--n-max", "3")
    assert code == 0
    assert payload["rows"][3] == ["0", "1", "6", "6"]


# -- polynomials and expectations ---------------------------------------------

def test_poly(capsys):
    code, lines, _ = run(capsys, "poly", "--family", "fr", "-n", "4")
    assert code == 0
    assert lines == ["24q^4 + 36q^3 + 14q^2 + q"]
    code, lines, _ = run(capsys, "poly", "--gessel-seo", "-n", "3")
    assert code == 0
    assert lines == ["6q^3 + 8q^2 + 2q"]
    code, _, err = run(capsys, "poly", "-n", "3")
    assert code == 2 and "needs --family" in err


def test_poly_tsv_lists_coefficients(capsys):
    code, lines, _ = run(capsys, "poly", "--family", "ufrinc", "-n", "4",
                         "--format", "tsv")
    assert code == 0
    assert lines == ["0\t0", "1\t0", "2\t1", "3\t3", "4\t1"]


def test_expect(capsys):
    code, lines, _ = run(capsys, "expect", "--family", "frinc", "-n", "9")
    assert code == 0
    assert lines == ["exact: 5 = 5.000000"]
    code, payload = run_json(capsys, "expect", "--family", "fr", "-n", "3",
                             "--asymptotic")
    assert code == 0
    assert payload["numerator"] == "31"
    assert payload["denominator"] == "13"
    assert payload["asymptotic"] == pytest.approx(2.164042561333445)


# -- series ---------------------------------------------------------------------

def test_egf_expand(capsys):
    code, lines, _ = run(capsys, "egf", "--identity", "ufrinc",
                         "--order", "3")
    assert code == 0
    assert lines == ["n=0: 1", "n=1: q", "n=2: q^2 + q", "n=3: q^3 + 2q^2"]


@pytest.mark.parametrize("identity", [
    "fr", "fr-total", "frinc", "frinc-total", "ufr", "ufr-total", "ufrinc"])
def test_egf_verify_all_identities(capsys, identity):
    code, lines, _ = run(capsys, "egf", "--identity", identity, "--verify",
                         "--order", "8")
    assert code == 0
    assert lines == [f"{identity}: verified to order 8"]


def test_egf_verify_json(capsys):
    code, payload = run_json(capsys, "egf", "--identity", "fr", "--verify",
                             "--order", "6")
    assert code == 0
    assert payload["ok"] is True
    assert payload["mismatches"] == []


# -- enumeration ------------------------------------------------------------------

def test_enumerate_matches_golden_files(capsys):
    code, lines, _ = run(capsys, "enumerate", "--family", "fr", "-n", "3",
                         "--format", "tsv")
    assert code == 0
    assert lines == (DATA / "fr_3.tsv").read_text().splitlines()
    code, lines, _ = run(capsys, "enumerate", "--family", "ufrinc", "-n", "4",
                         "--strategy", "construct", "--format", "tsv")
    assert code == 0
    assert lines == (DATA / "ufrinc_4.tsv").read_text().splitlines()


def test_enumerate_census(capsys):
    code, payload = run_json(capsys, "enumerate", "--family", "ufr",
                             "-n", "4", "--census")
    assert code == 0
    assert payload["total"] == "66"
    assert payload["lucky_histogram"] == {"2": "6", "3": "36", "4": "24"}
    assert payload["lucky_set_census"]["1 2 3"] == "18"


def test_enumerate_empty(capsys):
    code, lines, _ = run(capsys, "enumerate", "--family", "fr", "-n", "0")
    assert code == 0
    assert lines == [""]


def test_enumerate_over_cap_is_a_usage_error(capsys, monkeypatch):
    monkeypatch.delenv("LUCKYPARK_MAX_N", raising=False)
    code, _, err = run(capsys, "enumerate", "--family", "fr", "-n", "9")
    assert code == 2
    assert "LUCKYPARK_MAX_N" in err


# -- the cross-check suite ---------------------------------------------------------

def test_verify(capsys):
    code, lines, _ = run(capsys, "verify", "--all", "--n-max", "4")
    assert code == 0
    assert lines[-1] == "10/10 checks passed"
    assert all(line.startswith("PASS") for line in lines[:-1])


def test_verify_tsv(capsys):
    code, lines, _ = run(capsys, "verify", "--n-max", "3", "--format", "tsv")
    assert code == 0
    assert len(lines) == 10
    assert all(line.startswith("PASS\t") for line in lines)


# -- error handling ----------------------------------------------------------------

def test_bad_tuple_is_a_usage_error(capsys):
    code, _, err = run(capsys, "park", "1,x,3")
    assert code == 2
    assert "comma-separated integers" in err


def test_unknown_subcommand_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
