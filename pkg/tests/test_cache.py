import json

from flagcoh.cache import cache_dir, cache_key, cached_betti
from flagcoh.cohomology import presentation_picard_one, reduced_presentation
from flagcoh.dynkin import MarkedDiagram


def _pres():
    return reduced_presentation(presentation_picard_one(MarkedDiagram.parse("A3(2)")))


def test_env_override(tmp_path, monkeypatch):
    monkeypatch.setenv("FLAGCOH_CACHE", str(tmp_path / "x"))
    assert cache_dir() == tmp_path / "x"


def test_miss_then_hit():
    p = _pres()
    first, s1 = cached_betti(p, 6)
    second, s2 = cached_betti(p, 6)
    assert (s1, s2) == ("miss", "hit")
    assert first["betti"] == second["betti"] == [1, 1, 2, 1, 1]
    assert cached_betti(p, 6, use_cache=False)[1] == "off"


def test_key_depends_on_cap_and_presentation():
    p = _pres()
    assert cache_key(p, 6) != cache_key(p, 7)
    q = reduced_presentation(presentation_picard_one(MarkedDiagram.parse("A3(1)")))
    assert cache_key(p, 6) != cache_key(q, 6)


def test_corrupt_entry_is_recomputed():
    p = _pres()
    cached_betti(p, 6)
    path = cache_dir() / f"{cache_key(p, 6)}.json"
    path.write_text("{not json")
    data, status = cached_betti(p, 6)
    assert status == "miss" and json.loads(path.read_text())["betti"] == data["betti"]
