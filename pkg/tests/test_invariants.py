import pytest

import tropicount.invariants as inv
from tropicount.invariants import (
    conjecture_report, describe_target, proven_positive_range, target_from_record, welschinger,
    welschinger_all_I, welschinger_table,
)
from tropicount.lattice import DivisorSpec, LatticePolygon, polygon_for, rectangle
from tropicount.oracles import bidegree_d2, cubic
from tropicount.paths import Infeasible
from tropicount.store import Store, dumps, strip_timing

P3, P4 = DivisorSpec.plane(3), DivisorSpec.plane(4)


def test_cubic_table():
    assert welschinger_table(P3) == [cubic(m) for m in range(5)]


def test_small_planes():
    assert welschinger_table(DivisorSpec.plane(1)) == [1, 1]
    assert welschinger_table(DivisorSpec.plane(2)) == [1, 1, 1]


@pytest.mark.parametrize("d", [1, 2, 3])
def test_bidegree_d2_all_m(d):
    Q = DivisorSpec.quadric(d, 2)
    table = welschinger_table(Q, range(d + 2))
    assert table == [bidegree_d2(d, m) for m in range(d + 2)]


def test_blown_planes_frozen():
    # frozen engine values
    assert welschinger_table(DivisorSpec.blown(1, 3, 1)) == [8, 6, 4, 2]
    assert welschinger_table(DivisorSpec.blown(2, 3, 1, 1)) == [8, 6, 4, 2]
    assert welschinger_table(DivisorSpec.blown(3, 3, 1, 1, 1)) == [8, 6, 4]


@pytest.mark.parametrize("d", [3, 4])
def test_wall_crossing_against_blown_plane(d):
    # W_{P2,d}(m+1) - W_{P2,d}(m) = -2 W_{P1(d;2)}(m)
    w = welschinger_table(DivisorSpec.plane(d))
    b = welschinger_table(DivisorSpec.blown(1, d, 2))
    assert len(b) == len(w) - 1
    assert all(w[m + 1] - w[m] == -2 * b[m] for m in range(len(b)))


def test_lattice_equivalent_polygons_agree():
    # a unimodular shear and a translation of the (2, 2) square
    sq = rectangle(2, 2)
    sheared = LatticePolygon([(0, 0), (2, 0), (4, 2), (2, 2)])
    moved = sq.translated(3, -1)
    for m in range(3):
        v = welschinger(sq, m).value
        assert welschinger(sheared, m).value == v
        assert welschinger(moved, m).value == v


def test_i_independence_sampled():
    vals = {r.value for r in welschinger_all_I(DivisorSpec.quadric(2, 3), 2, sample=12)}
    assert vals == {20}


def test_infeasible_m():
    with pytest.raises(Infeasible):
        welschinger(P3, 5)
    with pytest.raises(ValueError):
        welschinger(P3, 1, I=(1, 2))
    with pytest.raises(ValueError):
        welschinger(P3, 1, I=(9,))


def test_stats_are_consistent():
    r = welschinger(P4, 0)
    assert r.value == 240
    assert r.stats.paths == 81 and r.stats.consistent == 240
    assert r.stats.positive - r.stats.negative <= r.value


def test_jobs_do_not_change_records(tmp_path):
    recs = []
    for j in (1, 4):
        r = welschinger(P4, 1, jobs=j)
        recs.append(dumps(strip_timing(r.to_record())))
    assert recs[0] == recs[1]


def test_cache_hit(tmp_path):
    st = Store(tmp_path)
    a = welschinger(DivisorSpec.quadric(2, 3), 0, store=st)
    b = welschinger(DivisorSpec.quadric(2, 3), 0, store=st)
    assert not a.cached and b.cached
    assert a.value == b.value == 48
    assert welschinger(DivisorSpec.quadric(2, 3), 0, store=st, use_cache=False).cached is False


def test_resume_after_interruption(tmp_path, monkeypatch):
    st = Store(tmp_path)

    class Stop(Exception):
        pass

    def stop_after_two(done, total):
        if done == 2:
            raise Stop

    with pytest.raises(Stop):
        welschinger(P4, 0, jobs=1, store=st, checkpoint=True, progress=stop_after_two)
    calls = []
    real = inv._run_unit
    monkeypatch.setattr(inv, "_run_unit", lambda *a: calls.append(a) or real(*a))
    r = welschinger(P4, 0, jobs=1, store=st, checkpoint=True, resume=True)
    assert r.value == 240
    n_units = len(inv.split_prefixes(polygon_for(P4), inv.resolve_index_set(polygon_for(P4), 0, None)))
    assert len(calls) == n_units - 2


def test_record_roundtrip():
    r = welschinger(DivisorSpec.blown(2, 3, 1, 1), 1)
    rec = r.to_record()
    assert rec["value"] == "6"
    assert target_from_record(rec) == DivisorSpec.blown(2, 3, 1, 1)
    poly = rectangle(1, 2)
    assert target_from_record(describe_target(poly)).vertices == poly.vertices


def test_conjecture_report():
    rep = conjecture_report(P4, welschinger_table(P4))
    assert rep.ok and rep.monotone and rep.strict_head
    assert list(proven_positive_range(P4)) == [0, 1, 2, 3]
    bad = conjecture_report(P4, [240, 144, -80, 40, 16, 0])
    assert not bad.ok
    assert any("NO" in line for line in bad.lines())
