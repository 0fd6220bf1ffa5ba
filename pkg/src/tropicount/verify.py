"""Golden and property suites run by ``tropicount verify``.

Every check produces a :class:`Check` with a short description of the
reference it is compared against.  ``inject_fault`` deliberately breaks the
engine so the harness can be shown to fail.
"""
from __future__ import annotations

import contextlib
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from . import compress
from .bounds import (
    SquareSequence,
    asymptotic_report,
    mixed_family,
    pk_reduction,
    plane_family,
    quadric_family,
)
from .chains import lemma_violations
from .example_w2d import w2d_polygon, w2d_index_set, w2d_top
from .invariants import conjecture_report, subdivisions, welschinger
from .lattice import DivisorSpec
from .oracles import (
    Relation,
    bidegree_d2,
    cubic,
    gw_bounds,
    kontsevich_N,
    load_tables,
    quartic_system,
    quintic_system,
    solve_difference_system,
    wallcross_check,
)

SUITES = ("tables", "lemmas", "wallcross", "bounds")


@dataclass
class Check:
    name: str
    reference: str
    ok: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.name}  [{self.reference}]  {self.detail}".rstrip()


@contextlib.contextmanager
def inject_fault(kind: str | None):
    """``sign``: every triangle factor A(T) gets the wrong sign."""
    if not kind:
        yield
        return
    if kind != "sign":
        raise ValueError(f"unknown fault {kind!r}")
    orig = compress.triangle_factor

    def bad(u, v, w):
        f = orig(u, v, w)
        return None if f is None else -f

    compress.triangle_factor = bad
    try:
        yield
    finally:
        compress.triangle_factor = orig


class _Runner:
    def __init__(self, fast: bool = False, store=None):
        self.fast = fast
        self.store = store
        self.checks: list[Check] = []
        self._w: dict = {}

    def W(self, spec, m, I=None) -> int:
        key = (spec, m, None if I is None else tuple(I))
        if key not in self._w:
            self._w[key] = welschinger(spec, m, I, jobs=1, store=self.store).value
        return self._w[key]

    def check(self, name: str, reference: str, fn: Callable[[], tuple[bool, str]]) -> Check:
        t = time.perf_counter()
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash is a failure of that check, not of the harness
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        c = Check(name, reference, bool(ok), detail, time.perf_counter() - t)
        self.checks.append(c)
        return c


def _eq(got, want) -> tuple[bool, str]:
    return got == want, f"got {got}, expected {want}"


def suite_tables(run: _Runner) -> None:
    gold = load_tables()
    P3, P4 = DivisorSpec.plane(3), DivisorSpec.plane(4)
    run.check("plane cubics W(3,m), m=0..4", "closed form 8-2m",
              lambda: _eq([run.W(P3, m) for m in range(5)], [cubic(m) for m in range(5)]))
    run.check("plane quartics W(4,m), m=0..5", "quartic table",
              lambda: _eq([run.W(P4, m) for m in range(6)], gold["quartic"]))
    run.check("Q(2,3), m=0", "anchor 48", lambda: _eq(run.W(DivisorSpec.quadric(2, 3), 0), 48))
    if not run.fast:
        run.check("Q(3,3), m=0", "anchor 1086", lambda: _eq(run.W(DivisorSpec.quadric(3, 3), 0), 1086))
        run.check("P1(5;2), m=0", "anchor 4584 = 9168/2",
                  lambda: _eq(run.W(DivisorSpec.blown(1, 5, 2), 0), 4584))
    for d in (1, 2, 3):
        Q = DivisorSpec.quadric(d, 2)
        run.check(f"bi-degree ({d},2), m=0..{d + 1}", "(d+m)2^(2d-2-m) and top value",
                  lambda Q=Q, d=d: _eq([run.W(Q, m) for m in range(d + 2)],
                                       [bidegree_d2(d, m) for m in range(d + 2)]))
    Q4 = DivisorSpec.quadric(4, 2)
    run.check("bi-degree (4,2), m in {0,1,5}", "(d+m)2^(2d-2-m) and top value",
              lambda: _eq([run.W(Q4, m) for m in (0, 1, 5)], [bidegree_d2(4, m) for m in (0, 1, 5)]))
    run.check("w2d_top(d) vs engine, d=1..4", "[(d+1)/2] 2^(d-1)",
              lambda: _eq([welschinger(w2d_polygon(d), d + 1, w2d_index_set(d), jobs=1).value for d in range(1, 5)],
                          [w2d_top(d) for d in range(1, 5)]))
    run.check("Kontsevich N_3", "twelve cubics", lambda: _eq(kontsevich_N(3).N, 12))
    run.check("Kontsevich N_1..12 golden", "recursion values",
              lambda: _eq([kontsevich_N(d).N for d in range(1, 13)], [int(x) for x in gold["kontsevich"]]))

    def bracket():
        bad = [d for d in range(3, 11) if not (gw_bounds(d)[0] <= kontsevich_N(d).N <= gw_bounds(d)[1])]
        return not bad, f"violations at d={bad}" if bad else "3 <= d <= 10"
    run.check("factorial bracket for N_d", "(3d-4)!/54^d <= N_d <= (3d-5)!", bracket)
    run.check("N_d >= W(d,0)", "complex count dominates real count",
              lambda: (kontsevich_N(3).N >= run.W(P3, 0) and kontsevich_N(4).N >= run.W(P4, 0),
                       f"12 >= {run.W(P3, 0)}, 620 >= {run.W(P4, 0)}"))

    def positivity():
        rows = [(P3, [run.W(P3, m) for m in range(5)]), (P4, [run.W(P4, m) for m in range(6)])]
        for d in (1, 2, 3):
            Q = DivisorSpec.quadric(d, 2)
            rows.append((Q, [run.W(Q, m) for m in range(d + 2)]))
        bad = []
        for spec, tab in rows:
            rep = conjecture_report(spec, tab)
            if not rep.ok or not rep.monotone:
                bad.append(rep.label)
        return not bad, f"failing: {bad}" if bad else f"{len(rows)} tables positive and monotone"
    run.check("positivity and monotonicity", "proven ranges, W(m-1) >= W(m)", positivity)
    run.check("strict head for P2(4)", "W0 > W1 > W2",
              lambda: (run.W(P4, 0) > run.W(P4, 1) > run.W(P4, 2), f"{run.W(P4, 0)} > {run.W(P4, 1)} > {run.W(P4, 2)}"))


def lemma_targets(fast: bool) -> Iterator[tuple[str, DivisorSpec, int]]:
    for d in (1, 2, 3, 4):
        P = DivisorSpec.plane(d)
        for m in range((3 * d - 1) // 2 + 1):
            yield P.label, P, m
    for d1, d2 in ((1, 1), (2, 1), (2, 2), (3, 2), (2, 3)):
        Q = DivisorSpec.quadric(d1, d2)
        for m in range(d1 + d2):
            yield Q.label, Q, m
    if not fast:
        yield "Q(3, 3)", DivisorSpec.quadric(3, 3), 0
        yield "P1(d=5; 2)", DivisorSpec.blown(1, 5, 2), 0


def suite_lemmas(run: _Runner) -> None:
    for label, spec, m in lemma_targets(run.fast):
        def fn(spec=spec, m=m):
            subs = list(subdivisions(spec, m))
            v = lemma_violations(subs)
            bad = {k: len(x) for k, x in v.items() if x}
            first = next((x[0] for x in v.values() if x), "")
            return not bad, f"{len(subs)} subdivisions" + (f"; {bad}; e.g. {first}" if bad else "")
        run.check(f"structural lemmas {label} m={m}", "extent, slope, chains, sign", fn)


def suite_wallcross(run: _Runner) -> None:
    P3, P4 = DivisorSpec.plane(3), DivisorSpec.plane(4)
    w3 = [run.W(P3, m) for m in range(5)]
    w4 = [run.W(P4, m) for m in range(6)]
    run.check("quartic: D^2 W4 = 4 W3", "difference relation",
              lambda: (wallcross_check(w4, w3, Relation(2, 4, tuple(range(4)))), f"W4={w4}"))
    q23 = run.W(DivisorSpec.quadric(2, 3), 0)
    run.check("quartic: -D W4(0) = 2 W_Q(2,3)", "96 = 2*48", lambda: _eq(w4[0] - w4[1], 2 * q23))
    run.check("quartic system from engine inputs", "quartic table",
              lambda: _eq(solve_difference_system(quartic_system(w3, q23, run.W(P4, 0))), w4))

    def quintic():
        gold = load_tables()["quintic"]
        q33 = 1086 if run.fast else run.W(DivisorSpec.quadric(3, 3), 0)
        p152 = 4584 if run.fast else run.W(DivisorSpec.blown(1, 5, 2), 0)
        t = time.perf_counter()
        got = solve_difference_system(quintic_system(w4, q33, p152))
        dt = time.perf_counter() - t
        return got == gold and dt < 1.0, f"{got} in {dt * 1000:.1f} ms"
    run.check("quintic table by wall-crossing", "-D^3 W5 = 8 W4 plus initial data", quintic)

    def d2_family():
        tabs = {d: [run.W(DivisorSpec.quadric(d, 2), m) for m in range(d + 2)] for d in (1, 2, 3)}
        ok = all(wallcross_check(tabs[d + 1], tabs[d], Relation(1, -2, tuple(range(d + 1)))) for d in (1, 2))
        return ok, "D W(d+1,2) = -2 W(d,2) for d = 1, 2"
    run.check("bi-degree (d,2) relation", "D^1 W_(d+1,2) = -2 W_(d,2)", d2_family)

    def fault():
        broken = list(w4)
        broken[2] += 2
        return not wallcross_check(broken, w3, Relation(2, 4, tuple(range(4)))), "perturbed table rejected"
    run.check("wall-crossing check rejects a perturbed table", "fault injection", fault)


def suite_bounds(run: _Runner) -> None:
    gold = load_tables()

    def plane_counts():
        fams = {n: plane_family(n) for n in (3, 4, 5)}
        counts = [fams[n].count for n in (3, 4, 5)]
        cert = all(fams[n].certified for n in (3, 4))
        mats = {n: fams[n].materialized for n in (3, 4)}
        return counts == [1, 6, 6] and cert, f"M = {counts}, materialized {mats}, certified {cert}"
    run.check("plane family M_3, M_4, M_5", "product formula 1, 6, 6", plane_counts)
    run.check("M_n <= W(n,0), n = 3, 4", "lower bound",
              lambda: (plane_family(3).count <= run.W(DivisorSpec.plane(3), 0)
                       and plane_family(4).count <= run.W(DivisorSpec.plane(4), 0), "1 <= 8, 6 <= 240"))
    run.check("square sequence inequality", "y_i <= n - x_i <= 2y_(i+1) + 1",
              lambda: (all(SquareSequence.build(n).check() for n in sorted({int(1.07 ** k) for k in range(1, 205)})),
                       "n up to 10^6, log-spaced"))

    def asym():
        rep = asymptotic_report("plane", [2 ** k for k in range(5, 13)])
        pinned = gold["asymptotic_plane"]
        close = all(abs(r[2] - pinned[str(r[0])]) < 1e-9 for r in rep.rows)
        return rep.increasing and close, f"ratios {[round(r[2], 4) for r in rep.rows]}"
    run.check("plane asymptotic ratio increasing", "log M_n / (3 n ln n), n = 2^5..2^12", asym)

    def quadric():
        f = quadric_family(1, 1, 1)
        g = quadric_family(1, 2, 2)
        h = quadric_family(2, 2, 1)
        ok = f.certified and g.certified and h.certified and g.count <= run.W(DivisorSpec.quadric(2, 2), 0)
        return ok and h.details["path_length"] == 11, f"counts {f.count}, {g.count}, {h.count}; path length {h.details['path_length']}"
    run.check("quadric family", "path length 2n(d1+d2)-1, replay +1", quadric)

    def pk():
        f = pk_reduction(1, DivisorSpec.blown(1, 2, 1))
        g = pk_reduction(1, DivisorSpec.blown(1, 3, 1))
        h = pk_reduction(2, DivisorSpec.blown(1, 3, 1))
        ok = f.certified and g.certified and h.details["factor"] == 24
        ok = ok and g.count <= run.W(DivisorSpec.blown(1, 3, 1), 0)
        return ok, f"counts {f.count}, {g.count}, {h.count}"
    run.check("P1 reduction", "(n(d-d1))! completions", pk)

    def mixed():
        a = mixed_family(1, 1, 1, 1)
        b = mixed_family(2, 1, 1, 2)
        return a.certified and b.certified and a.count >= 1 and b.count >= 1, f"{a.kind}, {b.kind}"
    run.check("mixed families", "positive witnesses", mixed)


SUITE_FUNCS = {"tables": suite_tables, "lemmas": suite_lemmas, "wallcross": suite_wallcross, "bounds": suite_bounds}


def run_suites(names, fast: bool = False, fault: str | None = None, store=None, echo=None) -> list[Check]:
    if isinstance(names, str):
        names = SUITES if names == "all" else (names,)
    unknown = [n for n in names if n not in SUITE_FUNCS]
    if unknown:
        raise ValueError(f"unknown suite(s) {unknown}; choose from {list(SUITES)} or 'all'")
    run = _Runner(fast=fast, store=None if fault else store)
    with inject_fault(fault):
        for name in names:
            start = len(run.checks)
            SUITE_FUNCS[name](run)
            if echo:
                for c in run.checks[start:]:
                    echo(c.line())
    return run.checks
