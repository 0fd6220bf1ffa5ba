"""W_{D,m} as the signed sum over admissible paths and consistent subdivisions.

The search tree over paths is cut into disjoint prefixes; each prefix is an
independent work unit whose partial sums are added in prefix order, so the
result does not depend on how many workers ran or in which order they
finished.
"""
from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .compress import Subdivision, build_seeds, compress_all
from .lattice import BLOWN, PLANE, QUADRIC, DivisorSpec, LatticePolygon, Point, polygon_for
from .paths import IndexSet, Infeasible, enumerate_paths, split_prefixes
from .store import ENGINE_VERSION, SCHEMA, Store, request_key

Target = DivisorSpec | LatticePolygon


@dataclass
class Stats:
    paths: int = 0
    seeds: int = 0
    consistent: int = 0
    positive: int = 0
    negative: int = 0
    duration: float = 0.0

    def add(self, other: "Stats") -> None:
        self.paths += other.paths
        self.seeds += other.seeds
        self.consistent += other.consistent
        self.positive += other.positive
        self.negative += other.negative

    def as_dict(self) -> dict:
        return {"paths": self.paths, "seeds": self.seeds, "consistent": self.consistent,
                "positive": self.positive, "negative": self.negative, "duration": round(self.duration, 6)}


@dataclass
class InvariantResult:
    spec: Target
    m: int
    index_set: IndexSet
    value: int
    stats: Stats = field(default_factory=Stats)
    cached: bool = False

    @property
    def polygon(self) -> LatticePolygon:
        return as_polygon(self.spec)

    def to_record(self) -> dict:
        rec = describe_target(self.spec)
        rec.update({
            "schema": SCHEMA,
            "m": self.m,
            "indexSet": list(self.index_set.indices),
            "value": str(self.value),
            "stats": self.stats.as_dict(),
            "engineVersion": ENGINE_VERSION,
        })
        return rec


def as_polygon(target: Target) -> LatticePolygon:
    return target if isinstance(target, LatticePolygon) else polygon_for(target)


def describe_target(target: Target) -> dict:
    if isinstance(target, LatticePolygon):
        return {"surface": "polygon", "degrees": [], "vertices": [list(v) for v in target.vertices],
                "label": target.name or repr(target)}
    rec = {"surface": target.surface, "degrees": list(target.degrees), "label": target.label}
    if target.surface == BLOWN:
        rec["k"] = target.k
    return rec


def target_from_record(rec: dict) -> Target:
    if rec["surface"] == "polygon":
        return LatticePolygon([tuple(v) for v in rec["vertices"]], name=rec.get("label", ""))
    degs = tuple(rec["degrees"])
    if rec["surface"] == PLANE:
        return DivisorSpec.plane(*degs)
    if rec["surface"] == QUADRIC:
        return DivisorSpec.quadric(*degs)
    return DivisorSpec.blown(rec["k"], *degs)


def resolve_index_set(poly: LatticePolygon, m: int, I: Iterable[int] | IndexSet | None) -> IndexSet:
    if m < 0 or 2 * m > poly.r:
        raise Infeasible(f"m = {m} needs 0 <= 2m <= r = {poly.r}")
    if I is None:
        return IndexSet.default(poly, m)
    if isinstance(I, IndexSet):
        idx = I.indices
    else:
        idx = tuple(I)
    if len(idx) != m:
        raise ValueError(f"index set {idx} has {len(idx)} elements, m = {m}")
    return IndexSet.for_polygon(poly, idx)


@lru_cache(maxsize=8)
def _polygon(vertices: tuple[Point, ...]) -> LatticePolygon:
    return LatticePolygon(vertices)


def _run_unit(vertices: tuple[Point, ...], indices: tuple[int, ...], n_edges: int,
              prefix: tuple[Point, ...]) -> tuple[int, Stats]:
    poly = _polygon(vertices)
    I = IndexSet(indices, n_edges)
    total = 0
    st = Stats()
    for path in enumerate_paths(poly, I, prefix=prefix):
        st.paths += 1
        for seed in build_seeds(poly, path):
            st.seeds += 1
            for sub in compress_all(seed, consistent_only=True):
                st.consistent += 1
                c = sub.coefficient
                if c > 0:
                    st.positive += 1
                elif c < 0:
                    st.negative += 1
                total += c
    return total, st


def _unit_id(prefix: Sequence[Point]) -> str:
    return ";".join(f"{x},{y}" for x, y in prefix)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("TROPICOUNT_JOBS", "1")))
    except ValueError:
        return 1


def request_for(target: Target, m: int, I: IndexSet) -> dict:
    req = describe_target(target)
    req.pop("label", None)
    req.update({"m": m, "indexSet": list(I.indices), "engineVersion": ENGINE_VERSION})
    return req


def welschinger(target: Target, m: int, I: Iterable[int] | IndexSet | None = None, *,
                jobs: int | None = None, store: Store | None = None, use_cache: bool = True,
                checkpoint: bool = False, resume: bool = False, split_depth: int = 2,
                progress=None) -> InvariantResult:
    """Exact W_{D,m} for a divisor (or any convex lattice polygon).

    ``I`` defaults to ``{1, ..., m}``.  With a ``store`` the result is looked
    up in and written to the cache; ``checkpoint`` records each finished work
    unit so an interrupted run continues with ``resume``.
    """
    poly = as_polygon(target)
    index_set = resolve_index_set(poly, m, I)
    jobs = default_jobs() if jobs is None else max(1, jobs)
    key = request_key(request_for(target, m, index_set))
    if store is not None and use_cache:
        rec = store.get(key)
        if rec is not None and rec.get("engineVersion") == ENGINE_VERSION:
            st = Stats(**rec["stats"])
            return InvariantResult(target, m, index_set, int(rec["value"]), st, cached=True)

    t0 = time.perf_counter()
    units = split_prefixes(poly, index_set, depth=split_depth)
    done = {}
    if store is not None and resume:
        done = store.read_checkpoint(key)
    elif store is not None and checkpoint:
        store.clear_checkpoint(key)
    partial: dict[str, tuple[int, Stats]] = {}
    for uid, entry in done.items():
        s = Stats(**{k: v for k, v in entry["stats"].items() if k != "duration"})
        partial[uid] = (int(entry["value"]), s)
    todo = [u for u in units if _unit_id(u) not in partial]
    args = [(poly.vertices, index_set.indices, index_set.n_edges, u) for u in todo]

    def finish(u, res):
        partial[_unit_id(u)] = res
        if store is not None and checkpoint:
            store.append_checkpoint(key, {"unit": _unit_id(u), "value": str(res[0]),
                                          "stats": res[1].as_dict()})
        if progress:
            progress(len(partial), len(units))

    if jobs == 1 or len(todo) <= 1:
        for u, a in zip(todo, args):
            finish(u, _run_unit(*a))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            futs = [ex.submit(_run_unit, *a) for a in args]
            for u, f in zip(todo, futs):
                finish(u, f.result())

    value = 0
    stats = Stats()
    for u in units:
        v, s = partial[_unit_id(u)]
        value += v
        stats.add(s)
    stats.duration = time.perf_counter() - t0
    res = InvariantResult(target, m, index_set, value, stats)
    if store is not None:
        store.put(key, res.to_record())
        if checkpoint:
            store.clear_checkpoint(key)
    return res


def welschinger_all_I(target: Target, m: int, sample: int | None = None, **kw) -> list[InvariantResult]:
    """One result per m-subset of path positions (the first ``sample`` subsets if given)."""
    poly = as_polygon(target)
    n = poly.r - m
    if m < 0 or 2 * m > poly.r:
        raise Infeasible(f"m = {m} needs 0 <= 2m <= r = {poly.r}")
    out = []
    for j, idx in enumerate(combinations(range(1, n + 1), m)):
        if sample is not None and j >= sample:
            break
        out.append(welschinger(target, m, idx, **kw))
    return out


def welschinger_table(target: Target, ms: Iterable[int] | None = None, **kw) -> list[int]:
    poly = as_polygon(target)
    if ms is None:
        ms = range(poly.r // 2 + 1)
    return [welschinger(target, m, **kw).value for m in ms]


def subdivisions(target: Target, m: int, I: Iterable[int] | IndexSet | None = None) -> Iterator[Subdivision]:
    """Every consistent subdivision contributing to W_{D,m}, in search order."""
    poly = as_polygon(target)
    index_set = resolve_index_set(poly, m, I)
    for path in enumerate_paths(poly, index_set):
        for seed in build_seeds(poly, path):
            yield from compress_all(seed, consistent_only=True)


def proven_positive_range(target: Target) -> range:
    """m for which positivity is a theorem (toric Del Pezzo surfaces)."""
    if isinstance(target, LatticePolygon):
        return range(0)
    top = (target.c1_dot_d - 1) // 2
    if target.surface == PLANE:
        return range(0, min(3, top) + 1)
    if target.surface == BLOWN:
        return range(0, min(2, top) + 1)
    d1, d2 = target.degrees
    return range(0, min(d1 + d2 - 1, top) + 1)


def strict_monotone_applies(target: Target) -> bool:
    """W_0 > W_1 > W_2 is a theorem when both axis projections have length >= 3."""
    if isinstance(target, LatticePolygon) or target.surface == QUADRIC:
        return False
    if target.surface == BLOWN and target.k == 3:
        return False
    poly = as_polygon(target)
    xs = [v[0] for v in poly.vertices]
    ys = [v[1] for v in poly.vertices]
    return max(xs) - min(xs) >= 3 and max(ys) - min(ys) >= 3


@dataclass
class ConjectureReport:
    label: str
    table: list[int]
    positive_conjectured: bool
    nonnegative_at_boundary: bool
    monotone: bool
    proven_positive: bool
    strict_head: bool | None

    @property
    def ok(self) -> bool:
        return self.proven_positive and self.strict_head is not False

    def lines(self) -> list[str]:
        flag = lambda b: "yes" if b else "NO"
        out = [f"{self.label}: W = {self.table}",
               f"  positive below the middle (conjecture): {flag(self.positive_conjectured)}",
               f"  non-negative at the middle (conjecture): {flag(self.nonnegative_at_boundary)}",
               f"  monotone W(m-1) >= W(m) (conjecture): {flag(self.monotone)}",
               f"  positive in the proven range: {flag(self.proven_positive)}"]
        if self.strict_head is not None:
            out.append(f"  W(0) > W(1) > W(2): {flag(self.strict_head)}")
        return out


def conjecture_report(target: Target, table: Sequence[int]) -> ConjectureReport:
    """Positivity and monotonicity checks on a table W(0), W(1), ...

    Conjectured properties are reported, proven ones decide ``ok``.
    """
    poly = as_polygon(target)
    mid = poly.r // 2
    label = target.label if isinstance(target, DivisorSpec) else repr(target)
    pos = all(w > 0 for m, w in enumerate(table) if m < mid)
    nonneg = len(table) <= mid or table[mid] >= 0
    mono = all(table[i - 1] >= table[i] for i in range(1, len(table)))
    proven = all(table[m] > 0 for m in proven_positive_range(target) if m < len(table))
    strict = None
    if strict_monotone_applies(target) and len(table) >= 3:
        strict = table[0] > table[1] > table[2]
    return ConjectureReport(label, list(table), pos, nonneg, mono, proven, strict)
