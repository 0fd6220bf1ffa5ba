import json

from tropicount.store import Store, atomic_write, dumps, request_key, strip_timing


def test_request_key_is_canonical():
    a = request_key({"m": 1, "spec": "x"})
    b = request_key({"spec": "x", "m": 1})
    assert a == b and len(a) == 32
    assert request_key({"m": 2, "spec": "x"}) != a


def test_put_get_roundtrip(tmp_path):
    st = Store(tmp_path)
    rec = {"value": "123456789012345678901234567890", "m": 0}
    path = st.put("k", rec)
    assert path.exists()
    assert st.get("k") == rec
    assert st.get("missing") is None
    assert list(st.records()) == [rec]


def test_dumps_is_sorted_and_stable():
    assert dumps({"b": 1, "a": [1, 2]}) == dumps({"a": [1, 2], "b": 1})
    assert json.loads(dumps({"v": "7"})) == {"v": "7"}


def test_strip_timing():
    rec = {"value": "8", "stats": {"duration": 1.5, "paths": 3}, "manifest": {"started": "x"}}
    assert strip_timing(rec) == {"value": "8", "stats": {"paths": 3}}


def test_checkpoint_ignores_torn_tail(tmp_path):
    st = Store(tmp_path)
    st.append_checkpoint("k", {"unit": "a", "value": "1"})
    st.append_checkpoint("k", {"unit": "b", "value": "2"})
    with open(st.checkpoint_path("k"), "a") as fh:
        fh.write('{"unit": "c", "val')
    got = st.read_checkpoint("k")
    assert set(got) == {"a", "b"}
    st.clear_checkpoint("k")
    assert st.read_checkpoint("k") == {}


def test_atomic_write_replaces(tmp_path):
    p = tmp_path / "f.json"
    atomic_write(p, "one")
    atomic_write(p, "two")
    assert p.read_text() == "two"
    assert [x.name for x in tmp_path.iterdir()] == ["f.json"]
