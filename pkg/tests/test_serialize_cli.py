import json
from pathlib import Path

import pytest

from artifact import serialize as S
from artifact.cli import main
from artifact.errors import ConfigError
from artifact.models import a2_initial, cubic_model, f3_model
from artifact.scattering import complete

CONFIGS = Path(__file__).resolve().parents[1] / "demos" / "configs"


def test_rationals():
    assert S.q("3/2") == S.q(1.5) == S.q("1.5")
    with pytest.raises(ConfigError):
        S.q("x")
    with pytest.raises(ConfigError):
        S.q(True)


def test_parse_error_has_position():
    with pytest.raises(ConfigError, match=r"<input>:1:\d+"):
        S.loads('{"schema": }')


def test_unknown_field_rejected():
    doc = {"schema": "fixed-data/1", "skew_form": [[0]], "d": [1], "extra": 1}
    with pytest.raises(ConfigError, match="unknown field"):
        S.check_schema(doc)
    with pytest.raises(ConfigError, match="schema"):
        S.check_schema({"fan": []})


def test_model_roundtrip():
    for m in (cubic_model(), f3_model()):
        assert S.model_from_doc(S.model_to_doc(m)) == m


def test_diagram_roundtrip():
    d = complete(a2_initial(5), 5)
    again = S.diagram_from_doc(json.loads(S.dumps(S.diagram_to_doc(d))))
    assert again == d


def test_cache_hit_and_version_mismatch(tmp_path):
    calls = []

    def compute():
        calls.append(1)
        return {"value": 1}

    key = S.input_hash({"schema": "x"}, 3)
    assert S.cached(tmp_path, key, compute) == ({"value": 1}, False)
    assert S.cached(tmp_path, key, compute) == ({"value": 1}, True)
    path = tmp_path / f"{key}.json"
    path.write_text(json.dumps({"cache_version": -1, "payload": {"value": 2}}))
    assert S.cached(tmp_path, key, compute) == ({"value": 1}, False)
    assert len(calls) == 2
    assert S.input_hash({"schema": "x"}, 3) != S.input_hash({"schema": "x"}, 4)


def run(args, capsys):
    rc = main([str(a) for a in args])
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_cli_complete_a2(tmp_path, capsys):
    out = tmp_path / "a2.json"
    rc, _, _ = run(["complete", CONFIGS / "a2.json", "--out", out, "--cache-dir", tmp_path / "c"], capsys)
    assert rc == 0
    assert len(json.loads(out.read_text())["walls"]) == 3


def test_cli_cache_matches_cold(tmp_path, capsys):
    cache = tmp_path / "c"
    texts = []
    for use_cache in (None, cache, cache):
        args = ["complete", CONFIGS / "squared.json", "--order", 4]
        if use_cache:
            args += ["--cache-dir", use_cache]
        texts.append(run(args, capsys)[1])
    assert texts[0] == texts[1] == texts[2]
    assert len(list(cache.glob("*.json"))) == 1


def test_cli_potential_dp5(capsys):
    rc, out, _ = run(["potential", CONFIGS / "dp5.json", "--chamber", "central"], capsys)
    assert rc == 0
    doc = json.loads(out)
    assert len(doc["limit_text"]) == 7


def test_cli_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"schema": "fixed-data/1",\n "skew_form": [[0, 1], [-1, 0]], "d": [1, 1], "junk": 0}')
    assert run(["cluster", bad], capsys)[0] == 2
    assert run(["cluster", tmp_path / "missing.json"], capsys)[0] == 2
    par = tmp_path / "par.json"
    par.write_text(json.dumps({"schema": "fixed-data/1", "skew_form": [[0, 1, 1], [-1, 0, 0], [-1, 0, 0]], "d": [1, 1, 1]}))
    rc, _, err = run(["cluster", par], capsys)
    assert rc == 3 and "ParallelImages" in err


def test_cli_render_and_tropical(tmp_path, capsys):
    d = tmp_path / "d.json"
    run(["complete", CONFIGS / "a2.json", "--out", d], capsys)
    rc, svg, _ = run(["render", d, "--svg-scale", 20], capsys)
    assert rc == 0 and svg.startswith("<svg")
    rc, out, _ = run(["tropical", CONFIGS / "chain_corner.json"], capsys)
    assert rc == 0 and json.loads(out)["equal"] is True
