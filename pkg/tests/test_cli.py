import json

import pytest

from mwmotive.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def report(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"command", "parameters", "result", "version"}
    return data["result"]


def test_tableaux_gr24(capsys):
    res = report(capsys, "tableaux", "-k", "2", "-n", "4")
    assert res["count"] == 6
    assert res["evens"] == [[], [2, 2]]
    sizes = [len(e["tableaux"]) for e in res["degrees"]]
    assert sizes == [1, 1, 2, 1, 1]


def test_tableaux_twisted_gr36_has_no_evens(capsys):
    res = report(capsys, "tableaux", "-k", "3", "-n", "6", "--twist")
    assert res["evens"] == []
    assert res["count"] == 20


def test_tableaux_point(capsys):
    res = report(capsys, "tableaux", "-k", "0", "-n", "0")
    assert res["count"] == 1
    assert res["evens"] == [[]]


def test_tableaux_matrices(capsys):
    res = report(capsys, "tableaux", "-k", "2", "-n", "4", "--matrices", "--max-degree", "1")
    first = res["degrees"][0]["sq2_matrix"]
    assert first["target"] == [[1]]
    assert len(res["degrees"]) == 2


def test_decompose_gr24(capsys):
    res = report(capsys, "decompose", "-k", "2", "-n", "4")
    d = res["decomposition"]
    assert d["witt_weights"] == [0, 4]
    c = d["counts"]
    assert c["s"] == [1, 1, 2, 1, 1]
    assert all(r["holds"] for r in res["recursions"])


def test_decompose_projective_line_witt_weights(capsys):
    res = report(capsys, "decompose", "-k", "1", "-n", "3")
    assert res["decomposition"]["witt_weights"] == [0]


def test_decompose_flag(capsys):
    res = report(capsys, "decompose", "--flag", "3")
    d = res["decomposition"]
    assert d["counts"]["s"] == [1, 2, 2, 1]
    assert d["witt_weights"] == [0, 3]
    assert d["notes"]


def test_chow_witt_twisted_gr24(capsys):
    res = report(capsys, "chow-witt", "-k", "2", "-n", "4", "--twist")
    assert res["reference_match"] == {"gw": True, "z": True}
    assert all(r["consistent"] for r in res["ranks"])
    gw = [s for row in res["degrees"] for s in row["gw"]]
    assert sorted(gw) == [[1, 1], [2]]


def test_chow_witt_markdown(capsys):
    code, out, _ = run(capsys, "chow-witt", "-k", "2", "-n", "4", "--format", "markdown")
    assert code == 0
    assert out.startswith("### CH~ of Gr(2,4)")
    assert "| d | GW | Z |" in out


def test_e_cohomology(capsys):
    res = report(capsys, "e-cohomology", "-k", "2", "-n", "4")
    assert [r["e_dim"] for r in res["degrees"]] == [1, 0, 0, 0, 1]
    assert all(r["split_verified"] for r in res["degrees"])


def test_flag_command(capsys):
    res = report(capsys, "flag", "-n", "4")
    assert res["e_dims"] == [1, 0, 0, 2, 0, 0, 1]
    assert res["exterior_check"] is True
    assert [t["degree"] for t in res["t_classes"]] == [3, 3]


def test_verify_flag_scope(capsys):
    res = report(capsys, "verify", "--scope", "flag", "--max-n", "6")
    assert res["passed"]
    assert {c["name"] for c in res["checks"]} == {"coinvariant_ring", "e_cohomology"}


@pytest.mark.parametrize("argv", [
    ["tableaux", "-k", "3", "-n", "2"],
    ["tableaux", "-k", "2"],
    ["decompose", "--flag", "0"],
    ["flag", "-n", "0"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.startswith("mwmotive")


def test_argparse_rejects_unknown_scope(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--scope", "nonsense"])
    assert exc.value.code == 2


def test_failed_verify_exits_one(capsys, monkeypatch):
    from mwmotive import verify

    def broken(b, r):
        r.expect(False, "forced")

    monkeypatch.setitem(verify.SUITES, "flag", [("broken", broken)])
    code, out, err = run(capsys, "verify", "--scope", "flag")
    assert code == 1
    assert json.loads(out)["result"]["passed"] is False
    assert "flag/broken" in err


@pytest.mark.parametrize("argv", [
    ["tableaux", "-k", "2", "-n", "5", "--twist"],
    ["decompose", "-k", "3", "-n", "6", "--twist"],
    ["chow-witt", "-k", "3", "-n", "6"],
])
def test_deterministic_and_round_trip(capsys, argv):
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    data = json.loads(first)
    assert json.dumps(data, indent=2, ensure_ascii=False) + "\n" == first
