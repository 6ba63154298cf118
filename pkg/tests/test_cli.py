import io
import json

import pytest

from strongedge.cli import RunConfig, build_parser, main

JOIN_K2_K2 = json.dumps({
    "type": "join",
    "children": [
        {"type": "tree", "n": 2, "edges": [[0, 1]]},
        {"type": "tree", "n": 2, "edges": [[0, 1]]},
    ],
})

UNION_P5_P5 = json.dumps({
    "type": "union",
    "children": [
        {"type": "tree", "n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4]]},
        {"type": "tree", "n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4]]},
    ],
})


def feed(monkeypatch, text):
    monkeypatch.setattr("sys.stdin", io.StringIO(text))


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_sci_join_verified(monkeypatch, capsys):
    feed(monkeypatch, JOIN_K2_K2)
    code, out = run_json(capsys, ["sci", "--json", "--verify", "--color"])
    assert code == 0
    assert out["value"] == 6 and out["n"] == 4 and out["m"] == 6
    assert out["verified"] is True
    assert len(out["coloring"]) == 6
    assert sorted(row["color"] for row in out["coloring"]) == list(range(6))


def test_sci_plain_output(monkeypatch, capsys):
    feed(monkeypatch, JOIN_K2_K2)
    assert main(["sci"]) == 0
    assert capsys.readouterr().out == "strong chromatic index: 6\n"


def test_im_union_verified(monkeypatch, capsys):
    feed(monkeypatch, UNION_P5_P5)
    code, out = run_json(capsys, ["im", "--json", "--verify"])
    assert code == 0
    assert out["value"] == 4 and len(out["witness"]) == 4
    assert out["verified"] is True


def test_perm_palettes(monkeypatch, capsys):
    for line, palette in [("2 1 0", 3), ("0 1 2", 0), ("1 0 3 2", 1)]:
        feed(monkeypatch, line)
        code, out = run_json(capsys, ["perm", "--json", "--verify"])
        assert code == 0 and out["palette"] == palette and out["verified"] is True


def test_input_from_file(tmp_path, capsys):
    p = tmp_path / "d.json"
    p.write_text(JOIN_K2_K2, encoding="utf-8")
    code, out = run_json(capsys, ["sci", str(p), "--json"])
    assert code == 0 and out["value"] == 6


def test_missing_file_is_an_input_error(capsys):
    assert main(["sci", "/no/such/file.json"]) == 2
    assert "error:" in capsys.readouterr().err


def test_malformed_decomposition_is_an_input_error(monkeypatch, capsys):
    feed(monkeypatch, "{not json")
    assert main(["sci"]) == 2
    assert "error:" in capsys.readouterr().err


def test_bad_permutation_is_an_input_error(monkeypatch, capsys):
    feed(monkeypatch, "0 0 1")
    assert main(["perm"]) == 2
    assert "error:" in capsys.readouterr().err


def test_oracle_agreement(monkeypatch, capsys):
    feed(monkeypatch, JOIN_K2_K2)
    code, out = run_json(capsys, ["oracle", "--json"])
    assert code == 0 and out["agree"] is True and out["mode"] == "decomp"
    assert {r["prop"] for r in out["reports"]} == {
        "strong chromatic index",
        "maximum induced matching",
    }
    assert all(r["verdict"] == "agree" for r in out["reports"])


def test_oracle_permutation_mode_autodetects(monkeypatch, capsys):
    feed(monkeypatch, "2 0 3 1")
    code, out = run_json(capsys, ["oracle", "--json"])
    assert code == 0 and out["mode"] == "perm" and out["agree"] is True


def test_oracle_disagreement_exits_one(monkeypatch, capsys):
    class FakeResult:
        value = 999

    monkeypatch.setattr("strongedge.cli.sci", lambda tree: FakeResult())
    feed(monkeypatch, JOIN_K2_K2)
    assert main(["oracle"]) == 1
    assert "disagree" in capsys.readouterr().out


def test_oracle_tiny_budget_is_inconclusive(monkeypatch, capsys):
    feed(monkeypatch, JOIN_K2_K2)
    assert main(["oracle", "--budget", "1"]) == 3
    assert "inconclusive" in capsys.readouterr().err


def test_failed_verification_exits_one(monkeypatch, capsys):
    monkeypatch.setattr(
        "strongedge.cli.is_strong_edge_coloring", lambda g, c: False
    )
    feed(monkeypatch, JOIN_K2_K2)
    assert main(["sci", "--verify"]) == 1
    assert "verification failed" in capsys.readouterr().err


def test_gen_is_deterministic_and_parseable(capsys):
    from strongedge import parse_decomposition

    assert main(["gen", "--seed", "7", "--count", "3"]) == 0
    first = capsys.readouterr().out
    assert main(["gen", "--seed", "7", "--count", "3"]) == 0
    assert capsys.readouterr().out == first
    lines = first.strip().splitlines()
    assert len(lines) == 3
    for line in lines:
        assert parse_decomposition(line).n >= 1


def test_gen_depth_zero_is_a_single_leaf(capsys):
    assert main(["gen", "--seed", "1", "--depth", "0"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["type"] in {"tree", "cotree"}


def test_gen_pipes_into_oracle(monkeypatch, capsys):
    assert main(["gen", "--seed", "3", "--leaf-size", "4"]) == 0
    doc = capsys.readouterr().out
    feed(monkeypatch, doc)
    assert main(["oracle", "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["agree"] is True


def test_bench_output_shape(capsys):
    code, out = main(["bench", "--max-exp", "4", "--repeats", "1"]), None
    out = json.loads(capsys.readouterr().out)
    assert code == 0
    assert [r["n"] for r in out["results"]] == [10**4]
    assert out["ratios"] == {"sci": [], "im": []}
    assert out["results"][0]["sci_seconds"] > 0


def test_run_config_from_args():
    parser = build_parser()
    cfg = RunConfig.from_args(parser.parse_args(["sci", "--json"]))
    assert cfg.command == "sci" and cfg.json is True
    assert cfg.input == "-" and cfg.seed == 0 and cfg.budget == 10**6

    cfg2 = RunConfig.from_args(parser.parse_args(["gen", "--leaf-size", "9"]))
    assert cfg2.command == "gen" and cfg2.leaf_size == 9 and cfg2.depth == 3

    with pytest.raises(SystemExit):
        parser.parse_args(["no-such-command"])
