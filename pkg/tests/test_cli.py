import contextlib
import io
import json
import os

import pytest

from reflexff import dumps, field_make, space_to_json, construct_regular_rep
from reflexff.cli import main


def run_cli(args):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(args)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def space_file(tmp_path):
    path = tmp_path / "space.json"
    s = construct_regular_rep(field_make(2), 2)
    path.write_text(dumps(space_to_json(s)))
    return str(path)


@pytest.fixture
def e11_file(tmp_path):
    path = tmp_path / "e11.json"
    path.write_text(dumps({"rows": 2, "cols": 2, "entries": [[1, 0], [0, 0]]}))
    return str(path)


def test_analyze(space_file):
    code, out, _ = run_cli(["analyze", space_file])
    assert code == 0
    d = json.loads(out)
    assert d["reflexive"] is False
    assert d["closure_dim"] == 4
    assert d["mrk"] == 2
    assert d["meta"]["tool"] == "reflexff"
    assert d["meta"]["field"] == {"p": 2, "k": 1}


def test_analyze_empty_basis(tmp_path):
    path = tmp_path / "zero.json"
    path.write_text(dumps({"field": {"p": 2, "k": 1}, "dim_u": 2, "dim_v": 2,
                           "basis": []}))
    code, out, _ = run_cli(["analyze", str(path)])
    assert code == 0
    d = json.loads(out)
    assert d["reflexive"] is True and d["mrk"] is None


def test_analyze_reflexive_lld_space(tmp_path):
    path = tmp_path / "s.json"
    path.write_text(dumps({
        "field": {"p": 2, "k": 1}, "dim_u": 2, "dim_v": 2,
        "basis": [{"rows": 2, "cols": 2, "entries": [[1, 0], [0, 0]]},
                  {"rows": 2, "cols": 2, "entries": [[0, 1], [0, 0]]}]}))
    code, out, _ = run_cli(["analyze", str(path)])
    assert code == 0
    d = json.loads(out)
    assert d["reflexive"] is True and d["lld"] is True


def test_malformed_input_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run_cli(["analyze", str(bad)])
    assert code == 2 and err
    code, _, _ = run_cli(["analyze", str(tmp_path / "missing.json")])
    assert code == 2


def test_dependent_basis_exit_3(tmp_path):
    path = tmp_path / "dep.json"
    ident = {"rows": 2, "cols": 2, "entries": [[1, 0], [0, 1]]}
    path.write_text(dumps({"field": {"p": 2, "k": 1}, "dim_u": 2, "dim_v": 2,
                           "basis": [ident, ident]}))
    code, _, err = run_cli(["analyze", str(path)])
    assert code == 3 and "depend" in err


def test_census_happy_path(space_file, e11_file):
    code, out, _ = run_cli(["census", space_file, e11_file])
    assert code == 0
    d = json.loads(out)
    assert d["incidence_count"] == "7"
    assert d["rank_profile"] == {"1": 3, "2": 1}


def test_census_g_in_s_exit_4(space_file, tmp_path):
    gpath = tmp_path / "ident.json"
    gpath.write_text(dumps({"rows": 2, "cols": 2, "entries": [[1, 0], [0, 1]]}))
    code, _, err = run_cli(["census", space_file, str(gpath)])
    assert code == 4 and "g in S" in err


def test_census_g_outside_closure_exit_4(tmp_path):
    spath = tmp_path / "s.json"
    spath.write_text(dumps({
        "field": {"p": 2, "k": 1}, "dim_u": 2, "dim_v": 2,
        "basis": [{"rows": 2, "cols": 2, "entries": [[1, 0], [0, 0]]},
                  {"rows": 2, "cols": 2, "entries": [[0, 1], [0, 0]]}]}))
    gpath = tmp_path / "e21.json"
    gpath.write_text(dumps({"rows": 2, "cols": 2, "entries": [[0, 0], [1, 0]]}))
    code, _, err = run_cli(["census", str(spath), str(gpath)])
    assert code == 4 and "g not in R(S)" in err


def test_trace_contradictions():
    code, out, _ = run_cli(["trace", "--q", "2", "--p", "3", "--n", "2",
                            "--profile", "2:4"])
    assert code == 0
    d = json.loads(out)
    assert d["contradiction"] is True and d["contradiction_via"] == "claim1"

    code, out, _ = run_cli(["trace", "--q", "2", "--p", "3", "--n", "2",
                            "--profile", "1:1,2:3"])
    assert json.loads(out)["contradiction"] is True

    code, _, err = run_cli(["trace", "--q", "2", "--p", "3", "--n", "2",
                            "--profile", "2:3"])
    assert code == 2 and "sum" in err


def test_search_exhaustive(space_file):
    code, out, _ = run_cli(["search", "--q", "2", "--dim-u", "2", "--dim-v", "2",
                            "--n", "2", "--mode", "exhaustive"])
    assert code == 0
    d = json.loads(out)
    assert d["spaces_examined"] == 35
    assert d["violations"] == []
    assert d["mrk_histogram"] == {"1": 9, "2": 2}


def test_search_n1_all_reflexive():
    code, out, _ = run_cli(["search", "--q", "2", "--dim-u", "2", "--dim-v", "2",
                            "--n", "1"])
    d = json.loads(out)
    assert d["nonreflexive_count"] == 0
    assert d["reflexive_count"] == 15


def test_search_guard_exit_5():
    code, _, err = run_cli(["search", "--q", "2", "--dim-u", "3", "--dim-v", "3",
                            "--n", "2", "--guard", "10"])
    assert code == 5 and "guard" in err


def test_search_nonprimepower_q_exit_2():
    code, _, err = run_cli(["search", "--q", "6", "--dim-u", "2", "--dim-v", "2",
                            "--n", "1"])
    assert code == 2


def test_construct_then_analyze_pipeline(tmp_path):
    out_path = str(tmp_path / "rep.json")
    code, _, _ = run_cli(["construct", "regular-rep", "--p", "2", "--n", "2",
                          "--output", out_path])
    assert code == 0
    payload = json.loads(open(out_path).read())
    assert payload["basis"][1]["entries"] == [[0, 1], [1, 1]]
    assert payload["_meta"]["params"] == {"family": "regular-rep", "p": 2, "n": 2}
    code, out, _ = run_cli(["analyze", out_path])
    d = json.loads(out)
    assert d["mrk"] == 2 and d["reflexive"] is False


def test_emitted_space_files_round_trip(tmp_path):
    from reflexff import load_space

    rep_path = str(tmp_path / "rep.json")
    run_cli(["construct", "regular-rep", "--p", "3", "--n", "2",
             "--output", rep_path])
    s = load_space(rep_path)
    closure_path = str(tmp_path / "closure.json")
    code, _, _ = run_cli(["closure", rep_path, "--output", closure_path])
    assert code == 0
    closure = load_space(closure_path)
    assert closure == s.reflexive_closure()
    # loading and re-emitting is stable
    from reflexff import space_to_json

    assert space_to_json(load_space(closure_path)) == space_to_json(closure)


def test_mrk_command(space_file):
    code, out, _ = run_cli(["mrk", space_file])
    d = json.loads(out)
    assert d["mrk"] == 2 and d["witness"] == [0, 1]


def test_stdout_is_pure_json(space_file):
    _, out, _ = run_cli(["analyze", space_file])
    json.loads(out)  # would raise on any non-JSON prefix/suffix
    assert out.endswith("\n")


def test_pretty_flag(space_file):
    code, out, _ = run_cli(["analyze", space_file, "--pretty"])
    assert code == 0
    assert "operator space analysis" in out
    with pytest.raises(json.JSONDecodeError):
        json.loads(out)


def test_version_embedded(space_file):
    from reflexff import __version__

    _, out, _ = run_cli(["analyze", space_file])
    assert json.loads(out)["meta"]["version"] == __version__


def test_theorem_violation_exit_10_and_artifact_dump(tmp_path, monkeypatch):
    import reflexff.cli as cli
    from reflexff import TheoremViolation, SearchParams, exhaustive_verify

    def boom(params):
        try:
            real = exhaustive_verify(SearchParams(field=field_make(2),
                                                  dim_u=2, dim_v=2, n=2))
        except TheoremViolation:  # pragma: no cover
            raise
        raise TheoremViolation("THEOREM VIOLATION: forced by test", real)

    monkeypatch.chdir(tmp_path)
    monkeypatch.setattr(cli, "exhaustive_verify", boom)
    code, _, err = run_cli(["search", "--q", "2", "--dim-u", "2", "--dim-v", "2",
                            "--n", "2"])
    assert code == 10
    assert "THEOREM VIOLATION" in err
    dumped = json.loads((tmp_path / "theorem_violation.json").read_text())
    assert dumped["spaces_examined"] == 35
