import json
import os
from pathlib import Path

import pytest

import conformal_workbench as cw

FIXTURES = Path(os.environ.get("CWB_FIXTURES", Path(__file__).resolve().parents[2] / "fixtures"))


def fx(name):
    return str(FIXTURES / name)


def test_parse_poly_canonical():
    assert cw.parse_poly("d + lam + c", ["c"]) == "d + lam + c"
    assert cw.parse_poly("(d+lam)^2 - d^2 - 2*d*lam") == "lam^2"
    with pytest.raises(ValueError):
        cw.parse_poly("lambda")


def test_rank_one_fixtures():
    assert cw.check_lsca(cw.Algebra.load(fx("rc.json")))["passed"]
    bad = cw.check_lsca(cw.Algebra.load(fx("bad1.json")))
    assert not bad["passed"]
    assert bad["failures"][0] == {"law": "left-symmetry", "at": ["x", "x", "x"], "residual": "(lam^2 - mu^2)*x"}


def test_subadjacent_and_derivations():
    rc = cw.Algebra.load(fx("rc.json"), {"c": "1"})
    lie = cw.subadjacent(rc)
    assert cw.check_lie(lie)["passed"]
    assert json.loads(lie.to_json())["table"]["(1,1)"] == ["(d + 2*lam)*x"]
    dim, ops = cw.solve_derivations(rc, 6)
    assert dim == 0 and ops == []
    assert cw.solve_derivations(cw.Algebra.load(fx("r0.json")), 1)[0] == 3


def test_errors_map_to_python_exceptions():
    with pytest.raises(cw.IoError):
        cw.Algebra.load(fx("misspelled.json"))
    with pytest.raises(cw.PreconditionError):
        cw.subadjacent(cw.Algebra.load(fx("bad1.json")))


def test_datums_and_search():
    semi = cw.Datum.load(fx("semidirect.json"))
    assert cw.check_datum(semi)["passed"]
    algebra, r_rank = cw.build_unified(semi)
    assert r_rank == 1 and algebra.rank == 2
    assert cw.check_lsca(algebra)["passed"]

    a = cw.Datum.load(fx("case1_a.json"))
    b = cw.Datum.load(fx("case1_b.json"))
    assert a.is_flag and cw.check_flag(a)["passed"]
    found = cw.search_equiv(a, b, 0, ["1"])
    assert found["status"] == "found"
    assert found["omega"] == "x" and found["beta"] == "1"
    assert cw.dflc_membership(b) == "DFLC1"


def test_run_matches_cli_contract():
    code, out, _ = cw.run(["check", fx("rc.json")])
    assert (code, out) == (0, "passed\n")
    code, out, _ = cw.run(["solve-derivations", fx("rc.json"), "--bind", "c=1", "--deg", "6"])
    assert (code, out) == (0, "dimension 0\n")
    code, _, _ = cw.run(["check", fx("bad1.json")])
    assert code == 1
    code, _, err = cw.run(["check", fx("no_such_file.json")])
    assert code == 2 and "cannot open" in err
