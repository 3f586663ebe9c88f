from pathlib import Path

from hochq.services.result_cache import ResultCache, cache_key


def test_round_trip(tmp_path: Path) -> None:
    cache = ResultCache(tmp_path)
    assert cache.get("abc", "hh", {"cap": 4}) is None
    path = cache.put("abc", "hh", {"cap": 4}, "g_id,m\n0,0\n")
    assert path is not None and path.exists()
    assert path.parent.name == path.stem[:2]
    assert cache.get("abc", "hh", {"cap": 4}) == "g_id,m\n0,0\n"


def test_disabled_cache_stores_nothing(tmp_path: Path) -> None:
    cache = ResultCache(tmp_path / "cache", enabled=False)
    assert cache.put("abc", "hh", {"cap": 4}, "artifact") is None
    assert cache.get("abc", "hh", {"cap": 4}) is None
    assert not (tmp_path / "cache").exists()


def test_key_covers_every_input() -> None:
    base = cache_key("abc", "hh", {"cap": 4, "g": 0})
    assert base == cache_key("abc", "hh", {"g": 0, "cap": 4})
    assert base != cache_key("abd", "hh", {"cap": 4, "g": 0})
    assert base != cache_key("abc", "basis", {"cap": 4, "g": 0})
    assert base != cache_key("abc", "hh", {"cap": 5, "g": 0})


def test_put_overwrites(tmp_path: Path) -> None:
    cache = ResultCache(tmp_path)
    cache.put("abc", "verify", {}, "first")
    cache.put("abc", "verify", {}, "second")
    assert cache.get("abc", "verify", {}) == "second"
    assert not list(tmp_path.rglob("*.tmp"))
