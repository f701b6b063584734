import os
import pickle
import time

from bosonize import example
from exactfield import CycloNumber
from storage import CacheManager, ReportStore, canonical_json, input_hash


def test_cyclo_numbers_pickle_exactly():
    x = CycloNumber.zeta(8, 3) * 2 + CycloNumber.rational(-1, 8)
    again = pickle.loads(pickle.dumps(x))
    assert again == x
    assert again.order == 8


class TestCacheManager:
    def test_round_trip_and_stats(self, tmp_path):
        cache = CacheManager(str(tmp_path / "cache"), default_ttl=60, stamp="1.0")
        params = {"sign": -1}
        assert cache.get_entry("taft", params) is None
        assert cache.store_entry("taft", params, {"dim": 4})
        assert cache.get_entry("taft", params) == {"dim": 4}
        assert cache.get_entry("taft", {"sign": 1}) is None
        stats = cache.get_cache_stats()
        assert stats["count"] == 1
        assert stats["by_example"] == {"taft": 1}

    def test_other_stamp_is_a_miss(self, tmp_path):
        CacheManager(str(tmp_path / "cache"), stamp="1.0").store_entry("h8", {}, "built")
        assert CacheManager(str(tmp_path / "cache"), stamp="1.1").get_entry("h8", {}) is None
        assert CacheManager(str(tmp_path / "cache"), stamp="1.0").get_entry("h8", {}) == "built"

    def test_expiry_and_cleanup(self, tmp_path):
        cache = CacheManager(str(tmp_path / "cache"), default_ttl=60)
        cache.store_entry("case-ii", {"n": 2}, [1, 2])
        path = next((tmp_path / "cache" / "examples").glob("case-ii_*.cache"))
        stale = time.time() - 3600
        os.utime(path, (stale, stale))
        assert cache.get_entry("case-ii", {"n": 2}) is None
        assert cache.cleanup_expired_cache() == 1

    def test_invalidate_and_clear(self, tmp_path):
        cache = CacheManager(str(tmp_path / "cache"))
        cache.store_entry("d8star", {}, 1)
        cache.store_entry("q8star", {}, 2)
        assert cache.invalidate("d8star", {})
        assert not cache.invalidate("d8star", {})
        assert cache.clear_cache() == 1

    def test_unreadable_entry_is_a_miss(self, tmp_path):
        cache = CacheManager(str(tmp_path / "cache"))
        cache.store_entry("taft", {}, 1)
        path = next((tmp_path / "cache" / "examples").glob("*.cache"))
        path.write_bytes(b"not a pickle")
        assert cache.get_entry("taft", {}) is None

    def test_catalog_entries_are_cached(self, tmp_path):
        cache = CacheManager(str(tmp_path / "cache"))
        built = example("taft", cache=cache, sign=-1)
        assert cache.get_cache_stats()["count"] == 1
        cached = example("taft", cache=cache, sign=-1)
        assert cached is not built
        assert cached.hopf.fingerprint() == built.hopf.fingerprint()
        assert cached.summary() == built.summary()


class TestReportStore:
    def test_canonical_json(self):
        assert canonical_json({"b": 1, "a": [1, 2]}, indent=None) == '{"a": [1, 2], "b": 1}\n'
        assert canonical_json({"b": 1, "a": 2}) == canonical_json({"a": 2, "b": 1})

    def test_input_hash_depends_on_bytes_and_order(self, tmp_path):
        first, second = tmp_path / "a.json", tmp_path / "b.json"
        first.write_text("{}")
        second.write_text("[]")
        digest = input_hash([first, second])
        assert len(digest) == 64
        assert digest == input_hash([first, second])
        assert digest != input_hash([second, first])

    def test_store_and_list(self, tmp_path):
        store = ReportStore(str(tmp_path / "reports"), indent=2)
        digest = "ab" * 32
        path = store.store_report("verify", digest, {"passed": True, "checks": []})
        assert path.name == f"verify_{digest[:12]}.json"
        assert path.read_text(encoding="utf-8").endswith("\n")
        assert store.get_report("verify", digest) == {"passed": True, "checks": []}
        assert store.get_report("verify", "cd" * 32) is None
        assert store.list_reports("verify") == [path]
        assert store.list_reports("rep-type") == []
