import json
import threading

import jsonschema
import pytest

from monoidtab import cache
from monoidtab.report import REPORT_SCHEMA, Report, combine, jsonable


@pytest.fixture
def cache_in(tmp_path):
    cache.set_cache_dir(tmp_path)
    yield tmp_path
    cache.set_cache_dir(None)


def test_round_trip(cache_in):
    key = {"object": "x", "n": 2}
    assert cache.load(key) is None
    cache.store(key, {"dim": 3})
    assert cache.load(key) == {"dim": 3}


def test_tampered_payload_is_ignored(cache_in):
    key = {"object": "x"}
    path = cache.store(key, [1, 2])
    data = json.loads(path.read_text())
    data["payload"] = [1, 3]
    path.write_text(json.dumps(data))
    assert cache.load(key) is None


def test_concurrent_writers_leave_a_valid_file(cache_in):
    key = {"object": "race"}
    threads = [threading.Thread(target=cache.store, args=(key, {"v": i})) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert cache.load(key) in [{"v": i} for i in range(8)]
    assert not list(cache_in.glob("*.tmp"))


def test_disabled_without_directory():
    cache.set_cache_dir(None)
    assert cache.store({"a": 1}, 1) is None and cache.load({"a": 1}) is None


def test_report_serialisation():
    from gmpy2 import mpq
    rep = Report("c", {"n": 1}, "pass", {"x": mpq(1, 2), "y": [mpq(3)]})
    doc = json.loads(rep.to_json())
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert doc["data"] == {"x": "1/2", "y": [3]}
    assert jsonable((1, {2})) == [1, [2]]
    with pytest.raises(ValueError):
        Report("c", {}, "maybe")


def test_combine_status():
    a, b = Report("a", {}, "pass"), Report("b", {}, "fail")
    assert combine("ab", {}, [a, b]).status == "fail"
    assert combine("aa", {}, [a, a]).status == "pass"
