import json

from quadsemi.cache import ENV_VAR, RunCache, resolve_cache
from quadsemi.engine import ENGINE_VERSION

HASH = "ab" * 8
PARAMS = {"max_degree": 12, "max_class_size": 100}
RESULT = {"dims": [1, 2, 0], "verdict": "finite:2"}


def test_miss_on_empty_directory(tmp_path):
    cache = RunCache(tmp_path)
    assert cache.lookup(HASH, "hilbert", PARAMS) is None
    assert not cache.path.exists()


def test_round_trip(tmp_path):
    cache = RunCache(tmp_path)
    cache.store(HASH, "hilbert", PARAMS, RESULT, 0.25)
    assert cache.lookup(HASH, "hilbert", PARAMS) == RESULT


def test_parameter_order_does_not_matter(tmp_path):
    cache = RunCache(tmp_path)
    cache.store(HASH, "hilbert", PARAMS, RESULT, 0.0)
    flipped = {"max_class_size": 100, "max_degree": 12}
    assert cache.lookup(HASH, "hilbert", flipped) == RESULT


def test_mismatches_miss(tmp_path):
    cache = RunCache(tmp_path)
    cache.store(HASH, "hilbert", PARAMS, RESULT, 0.0)
    assert cache.lookup("cd" * 8, "hilbert", PARAMS) is None
    assert cache.lookup(HASH, "regularity", PARAMS) is None
    assert cache.lookup(HASH, "hilbert", {**PARAMS, "max_degree": 13}) is None


def test_engine_version_gates_hits(tmp_path):
    cache = RunCache(tmp_path)
    record = cache.store(HASH, "hilbert", PARAMS, RESULT, 0.0)
    assert record.engine_version == ENGINE_VERSION
    line = json.loads(cache.path.read_text())
    line["engine_version"] = "0.0.0"
    cache.path.write_text(json.dumps(line) + "\n")
    assert cache.lookup(HASH, "hilbert", PARAMS) is None


def test_last_matching_line_wins(tmp_path):
    cache = RunCache(tmp_path)
    cache.store(HASH, "hilbert", PARAMS, {"dims": [1]}, 0.0)
    cache.store(HASH, "hilbert", PARAMS, RESULT, 0.0)
    assert cache.lookup(HASH, "hilbert", PARAMS) == RESULT
    assert len(cache.path.read_text().splitlines()) == 2


def test_corrupt_lines_are_skipped(tmp_path):
    cache = RunCache(tmp_path)
    cache.store(HASH, "hilbert", PARAMS, RESULT, 0.0)
    with cache.path.open("a", encoding="utf-8") as fh:
        fh.write("{truncated\n")
        fh.write('{"presentation_hash": "zz"}\n')
        fh.write("\n")
    assert cache.lookup(HASH, "hilbert", PARAMS) == RESULT


def test_store_creates_directory(tmp_path):
    cache = RunCache(tmp_path / "deep" / "nested")
    cache.store(HASH, "op", {}, {}, 0.0)
    assert cache.path.exists()


def test_resolve_precedence(tmp_path, monkeypatch):
    monkeypatch.delenv(ENV_VAR, raising=False)
    assert resolve_cache(None) is None
    monkeypatch.setenv(ENV_VAR, str(tmp_path / "env"))
    assert resolve_cache(None).directory == tmp_path / "env"
    assert resolve_cache(str(tmp_path / "flag")).directory == tmp_path / "flag"
    monkeypatch.setenv(ENV_VAR, "")
    assert resolve_cache(None) is None
