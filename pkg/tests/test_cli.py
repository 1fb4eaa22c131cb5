"""Command-line interface: formats, exit codes, and the result cache."""

from __future__ import annotations

import json
import os

import pytest

from ttlab import __version__
from ttlab.cli import cache_key, run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ----------------------------------------------------------------------
# happy paths per subcommand
# ----------------------------------------------------------------------

def test_gen_dtr_text_prints_bare_encoding(capsys):
    code, out, err = invoke(capsys, "gen", "dtr", "--n", "4", "--r", "2")
    assert code == 0
    assert out == "TDG 4 033330\n"
    assert err == ""


def test_gen_blowup_json_record_shape(capsys):
    code, out, _ = invoke(capsys, "gen", "blowup", "--k", "3", "--t", "2",
                          "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert set(record) == {"command", "params", "result", "version", "runtime_ms"}
    assert record["command"] == "gen"
    assert record["version"] == __version__
    assert record["params"] == {"construction": "blowup", "k": 3, "t": 2}
    assert record["result"]["n"] == 6
    assert record["result"]["f1"] == 12
    assert isinstance(record["runtime_ms"], float)


def test_check_free_and_witness(tmp_path, capsys):
    graph = tmp_path / "g.tdg"
    graph.write_text("TDG 4 033330\n")
    code, out, _ = invoke(capsys, "check", "--graph", str(graph), "--k", "3", "--t", "1")
    assert code == 0 and out == "free: yes\n"

    code, out, _ = invoke(capsys, "check", "--graph", str(graph), "--k", "2", "--t", "2",
                          "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert record["result"]["free"] is False
    assert record["result"]["witness"] == [0, 1, 2, 3]


def test_ex_json_reports_exact_value_and_witness(capsys):
    code, out, _ = invoke(capsys, "ex", "--n", "4", "--k", "3", "--t", "1",
                          "--format", "json")
    assert code == 0
    result = json.loads(out)["result"]
    assert result["value_exact"] == "8"
    assert result["f2"] == 4 and result["f1"] == 0
    assert result["witness"] == "TDG 4 033330"
    assert result["explored"].isdigit()  # big counts travel as strings


def test_ex_log3_has_no_exact_value(capsys):
    code, out, _ = invoke(capsys, "ex", "--n", "3", "--k", "3", "--t", "1",
                          "--weight", "log3", "--format", "json")
    assert code == 0
    result = json.loads(out)["result"]
    assert result["value_exact"] is None
    assert result["value_float"] > 0


def test_count_text_prints_number_only(capsys):
    code, out, _ = invoke(capsys, "count", "free", "--n", "3", "--k", "3", "--t", "1",
                          "--mode", "oriented")
    assert code == 0 and out == "21\n"
    code, out, _ = invoke(capsys, "count", "partite", "--n", "3", "--r", "2", "--t", "1",
                          "--mode", "oriented")
    assert code == 0 and out == "19\n"


def test_count_json_uses_decimal_strings(capsys):
    code, out, _ = invoke(capsys, "count", "free", "--n", "4", "--k", "3", "--t", "1",
                          "--format", "json")
    assert code == 0
    record = json.loads(out)
    assert isinstance(record["result"]["count"], str)
    assert record["result"]["count"].isdigit()


def test_ratio_text_report(capsys):
    code, out, _ = invoke(capsys, "ratio", "--n", "3", "--r", "2", "--t", "1",
                          "--mode", "oriented")
    assert code == 0
    assert "free_count:    21" in out
    assert "partite_count: 19" in out
    assert "21/19" in out


def test_mh_csv_row(capsys):
    code, out, _ = invoke(capsys, "mh", "--k", "3", "--t", "1", "--format", "csv")
    assert code == 0
    header, row = out.strip().split("\n")
    assert header == "command,k,t,m,exponent,exponent_float,argmax_subgraph,bound_shape"
    cells = row.split(",")
    assert cells[0] == "mh" and cells[3] == "2" and cells[4] == "3/2"


def test_editdist_roundtrip_through_file(tmp_path, capsys):
    graph = tmp_path / "h.tdg"
    graph.write_text("TDG 4 011110\n")
    code, out, _ = invoke(capsys, "editdist", "--graph", str(graph), "--r", "2")
    assert code == 0
    assert out.splitlines()[0] == "distance: 4"


def test_gen_output_feeds_check(tmp_path, capsys):
    code, out, _ = invoke(capsys, "gen", "dtr", "--n", "5", "--r", "3")
    graph = tmp_path / "dtr.tdg"
    graph.write_text(out)
    code, out, _ = invoke(capsys, "check", "--graph", str(graph), "--k", "4", "--t", "1")
    assert code == 0 and out == "free: yes\n"


def test_csv_gen_header_is_fixed(capsys):
    code, out, _ = invoke(capsys, "gen", "dtr", "--n", "3", "--r", "2", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "command,construction,n,r,k,t,f1,f2,encoding"
    assert lines[1] == "gen,dtr,3,2,,,0,2,TDG 3 033"


def test_global_flags_accepted_before_subcommand(capsys):
    code, out_after, _ = invoke(capsys, "gen", "dtr", "--n", "3", "--r", "2",
                                "--format", "csv")
    code2, out_before, _ = invoke(capsys, "--format", "csv", "gen", "dtr",
                                  "--n", "3", "--r", "2")
    assert code == code2 == 0
    assert out_before == out_after


# ----------------------------------------------------------------------
# exit codes
# ----------------------------------------------------------------------

def test_domain_errors_exit_one(tmp_path, capsys):
    code, _, err = invoke(capsys, "ex", "--n", "99", "--k", "3", "--t", "1")
    assert code == 1 and "error:" in err

    code, _, err = invoke(capsys, "ex", "--n", "4", "--k", "1", "--t", "1")
    assert code == 1

    code, _, err = invoke(capsys, "ex", "--n", "4", "--k", "3", "--t", "1",
                          "--weight", "3/2")
    assert code == 1 and "weight" in err

    bad = tmp_path / "bad.tdg"
    bad.write_text("TDG 3 9xx\n")
    code, _, err = invoke(capsys, "check", "--graph", str(bad), "--k", "2", "--t", "1")
    assert code == 1 and "position" in err

    code, _, err = invoke(capsys, "check", "--graph", str(tmp_path / "nothing.tdg"),
                          "--k", "2", "--t", "1")
    assert code == 1


def test_usage_errors_exit_two(capsys):
    code, _, _ = invoke(capsys, "frobnicate")
    assert code == 2
    code, _, _ = invoke(capsys, "ex", "--n", "4", "--k", "3")  # --t missing
    assert code == 2
    code, _, _ = invoke(capsys, "count", "--n", "3")  # variant missing
    assert code == 2
    code, _, _ = invoke(capsys, "ex", "--n", "4", "--k", "3", "--t", "1",
                        "--mode", "sideways")
    assert code == 2


# ----------------------------------------------------------------------
# cache
# ----------------------------------------------------------------------

def test_cache_hit_replays_byte_identically(tmp_path, capsys):
    cache = str(tmp_path / "cache")
    args = ("ex", "--n", "4", "--k", "3", "--t", "1", "--format", "json",
            "--cache-dir", cache)
    _, first, _ = invoke(capsys, *args)
    entries = os.listdir(cache)
    assert len(entries) == 1
    _, second, _ = invoke(capsys, *args)
    assert second == first  # includes the original runtime_ms
    assert os.listdir(cache) == entries


def test_cache_key_depends_on_params_and_version():
    a = cache_key("ex", {"n": 4, "k": 3, "t": 1, "weight": "2", "mode": "digraph"})
    b = cache_key("ex", {"n": 5, "k": 3, "t": 1, "weight": "2", "mode": "digraph"})
    assert a != b
    assert len(a) == 64 and all(c in "0123456789abcdef" for c in a)


def test_cache_entries_accumulate_per_params(tmp_path, capsys):
    cache = str(tmp_path / "cache")
    invoke(capsys, "gen", "dtr", "--n", "3", "--r", "2", "--cache-dir", cache)
    invoke(capsys, "gen", "dtr", "--n", "4", "--r", "2", "--cache-dir", cache)
    invoke(capsys, "gen", "dtr", "--n", "3", "--r", "2", "--cache-dir", cache)
    assert len(os.listdir(cache)) == 2


def test_cache_env_var_is_honoured(tmp_path, capsys, monkeypatch):
    cache = tmp_path / "envcache"
    monkeypatch.setenv("TTLAB_CACHE_DIR", str(cache))
    invoke(capsys, "count", "free", "--n", "3", "--k", "3", "--t", "1")
    assert len(os.listdir(cache)) == 1


def test_corrupt_cache_entry_is_ignored_with_warning(tmp_path, capsys):
    cache = tmp_path / "cache"
    args = ("gen", "dtr", "--n", "3", "--r", "2", "--format", "json",
            "--cache-dir", str(cache))
    _, first, _ = invoke(capsys, *args)
    entry = cache / os.listdir(cache)[0]
    entry.write_text("not json at all")
    code, out, err = invoke(capsys, *args)
    assert code == 0
    assert json.loads(out)["result"] == json.loads(first)["result"]
    assert "warning" in err


def test_unusable_cache_dir_warns_but_succeeds(tmp_path, capsys):
    blocker = tmp_path / "blocker"
    blocker.write_text("x")
    code, out, err = invoke(capsys, "gen", "dtr", "--n", "3", "--r", "2",
                            "--cache-dir", str(blocker))
    assert code == 0
    assert out == "TDG 3 033\n"
    assert "warning" in err


def test_check_cache_keys_by_graph_content_not_path(tmp_path, capsys):
    cache = str(tmp_path / "cache")
    g1 = tmp_path / "a.tdg"
    g2 = tmp_path / "b.tdg"
    g1.write_text("TDG 3 111\n")
    g2.write_text("TDG 3 111\n")
    invoke(capsys, "check", "--graph", str(g1), "--k", "3", "--t", "1",
           "--cache-dir", cache)
    invoke(capsys, "check", "--graph", str(g2), "--k", "3", "--t", "1",
           "--cache-dir", cache)
    assert len(os.listdir(cache)) == 1
