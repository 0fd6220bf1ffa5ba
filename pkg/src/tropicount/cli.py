"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or invalid divisor,
3 infeasible parameters.
"""
from __future__ import annotations

import argparse
import datetime as _dt
import json
import sys
from pathlib import Path

from . import __version__
from .bounds import asymptotic_report, mixed_family, pk_reduction, plane_family, quadric_family
from .example_w2d import w2d_family, w2d_index_set, w2d_polygon, w2d_top
from .invariants import default_jobs, resolve_index_set, subdivisions, welschinger
from .lattice import DivisorSpec, InvalidDivisor, polygon_for
from .paths import Infeasible, enumerate_paths
from .store import ENGINE_VERSION, Store, atomic_write, dumps
from .svg import MalformedRecord, load_subdivision, render_svg, subdivision_record

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2, 3

SURFACES = {"p2": (1, 1), "q": (2, 2), "p1": (2, 2), "p2bl": (3, 3), "p3": (4, 4)}


class UsageError(ValueError):
    pass


def _ints(text: str | None) -> tuple[int, ...]:
    if text is None or text.strip() == "":
        return ()
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise UsageError(f"expected comma separated integers, got {text!r}") from None


def make_spec(surface: str, degrees: str) -> DivisorSpec:
    ds = _ints(degrees)
    lo, hi = SURFACES[surface]
    if not lo <= len(ds) <= hi:
        raise UsageError(f"--surface {surface} takes {lo} degree value(s), got {len(ds)}")
    if surface == "p2":
        spec = DivisorSpec.plane(*ds)
    elif surface == "q":
        spec = DivisorSpec.quadric(*ds)
    else:
        k = {"p1": 1, "p2bl": 2, "p3": 3}[surface]
        spec = DivisorSpec.blown(k, *ds)
    polygon_for(spec)  # raises InvalidDivisor when the polygon degenerates
    return spec


def _now() -> str:
    return _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")


def _add_query(p: argparse.ArgumentParser) -> None:
    p.add_argument("--surface", choices=sorted(SURFACES), required=True)
    p.add_argument("--degrees", required=True, help="comma separated, e.g. 3 or 2,3 or 5,2")
    p.add_argument("--m", type=int, default=0, help="number of imaginary point pairs")
    p.add_argument("--index-set", default=None, help="1-based path positions, e.g. 1,4 (default 1..m)")


def cmd_invariant(args) -> int:
    spec = make_spec(args.surface, args.degrees)
    I = _ints(args.index_set) if args.index_set is not None else None
    store = Store(args.cache) if args.cache else Store()
    started = _now()
    progress = None
    if args.progress:
        progress = lambda done, total: print(f"\r{done}/{total} units", end="", file=sys.stderr)
    res = welschinger(spec, args.m, I, jobs=args.jobs, store=store, use_cache=not args.no_cache,
                      checkpoint=True, resume=args.resume, progress=progress)
    if progress:
        print(file=sys.stderr)
    record = res.to_record()
    out = Path(args.out) if args.out else None
    record["manifest"] = {
        "command": "invariant", "spec": spec.label, "m": args.m, "indexSet": list(res.index_set.indices),
        "engineVersion": ENGINE_VERSION, "started": started, "finished": _now(),
        "output": str(out) if out else None, "cacheHit": res.cached, "cacheDir": str(store.root),
        "version": __version__,
    }
    if out:
        atomic_write(out, dumps(record))
    if args.json:
        print(dumps(record), end="")
    else:
        print(f"W[{spec.label}, m={args.m}, I={list(res.index_set.indices)}] = {res.value}")
        st = res.stats
        print(f"  paths {st.paths}, seeds {st.seeds}, consistent {st.consistent} "
              f"(+{st.positive}/-{st.negative}), {st.duration:.2f}s{' (cached)' if res.cached else ''}")
    return EXIT_OK


def cmd_paths(args) -> int:
    spec = make_spec(args.surface, args.degrees)
    poly = polygon_for(spec)
    I = resolve_index_set(poly, args.m, _ints(args.index_set) if args.index_set is not None else None)
    n = 0
    for path in enumerate_paths(poly, I):
        n += 1
        if args.limit is None or n <= args.limit:
            print(" ".join(f"({x},{y})" for x, y in path.vertices))
    print(f"{n} admissible paths for {spec.label}, I = {list(I.indices)}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_suites

    checks = run_suites(args.suite, fast=args.fast, fault=args.inject_fault, echo=print)
    failed = [c for c in checks if not c.ok]
    print(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    if args.report:
        atomic_write(Path(args.report), dumps({"suite": args.suite, "checks": [
            {"name": c.name, "reference": c.reference, "ok": c.ok, "detail": c.detail} for c in checks]}))
    return EXIT_FAIL if failed else EXIT_OK


def cmd_export_svg(args) -> int:
    if args.record:
        try:
            text = Path(args.record).read_text()
        except OSError as exc:
            raise UsageError(str(exc)) from None
        try:
            sub = load_subdivision(text)
        except MalformedRecord as exc:
            print(f"malformed subdivision record: {exc}", file=sys.stderr)
            return EXIT_USAGE
    else:
        if not (args.surface and args.degrees):
            raise UsageError("give --record FILE or --surface/--degrees/--m")
        spec = make_spec(args.surface, args.degrees)
        I = _ints(args.index_set) if args.index_set is not None else None
        sub, seen = None, 0
        for s in subdivisions(spec, args.m, I):
            if seen == args.which:
                sub = s
                break
            seen += 1
        if sub is None:
            print(f"only {seen} subdivisions; --which {args.which} is out of range", file=sys.stderr)
            return EXIT_USAGE
        if args.record_out:
            atomic_write(Path(args.record_out), dumps(subdivision_record(sub)))
    svg = render_svg(sub)
    if args.out:
        atomic_write(Path(args.out), svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def cmd_example_w2d(args) -> int:
    d = args.d
    print(f"W[(2,{d}), m={d + 1}] = {w2d_top(d)} (family sum)")
    if args.engine:
        v = welschinger(w2d_polygon(d), d + 1, w2d_index_set(d), jobs=1).value
        fam = w2d_family(d)
        for k, row in fam.by_k.items():
            print(f"  k={k}: {row['paths']} path(s), {row['seeds']} seeds, coefficient {row['coefficients']}")
        print(f"general engine: {v}; {'agrees' if v == w2d_top(d) else 'DISAGREES'}")
        if fam.violations:
            for line in fam.violations:
                print("  violation:", line)
        return EXIT_OK if v == w2d_top(d) and not fam.violations else EXIT_FAIL
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.kind == "asymptotic":
        grid = _ints(args.grid)
        rep = asymptotic_report(args.family, grid, *(_ints(args.degrees) or (1, 1)), mu=args.mu)
        if args.csv:
            atomic_write(Path(args.csv), rep.to_csv())
        if args.json:
            atomic_write(Path(args.json), rep.to_json() + "\n")
        sys.stdout.write(rep.to_csv())
        print(f"increasing: {rep.increasing}; fit {rep.fit}", file=sys.stderr)
        return EXIT_OK
    ds = _ints(args.degrees)
    if args.kind == "plane":
        fam = plane_family(args.n)
    elif args.kind == "quadric":
        fam = quadric_family(args.n, *ds)
    elif args.kind == "pk":
        k = len(ds) - 1
        fam = pk_reduction(args.n, DivisorSpec.blown(k, *ds))
    else:
        fam = mixed_family(args.n, *ds[:2], int(args.mu))
    print(json.dumps(fam.summary(), indent=1, sort_keys=True, default=str))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tropicount", description="Exact Welschinger invariants of toric Del Pezzo surfaces")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariant", help="compute W_{D,m}")
    _add_query(p)
    p.add_argument("--jobs", type=int, default=None, help="worker processes (env TROPICOUNT_JOBS)")
    p.add_argument("--resume", action="store_true", help="continue from the checkpoint of an interrupted run")
    p.add_argument("--no-cache", action="store_true")
    p.add_argument("--cache", default=None, help="cache directory (env TROPICOUNT_CACHE, default ./.tropicount)")
    p.add_argument("--out", default=None, help="write the result record here")
    p.add_argument("--json", action="store_true", help="print the record instead of a summary")
    p.add_argument("--progress", action="store_true")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("paths", help="list admissible lattice paths")
    _add_query(p)
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("verify", help="run golden and property suites")
    p.add_argument("suite", choices=["tables", "lemmas", "wallcross", "bounds", "all"])
    p.add_argument("--fast", action="store_true", help="skip the multi-second anchors")
    p.add_argument("--report", default=None, help="write a JSON report")
    p.add_argument("--inject-fault", default=None, choices=["sign"], help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-svg", help="render a subdivision")
    p.add_argument("--record", default=None, help="subdivision record (JSON)")
    p.add_argument("--surface", choices=sorted(SURFACES))
    p.add_argument("--degrees")
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--index-set", default=None)
    p.add_argument("--which", type=int, default=0, help="index of the subdivision in search order")
    p.add_argument("--record-out", default=None, help="also save the subdivision record")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_export_svg)

    p = sub.add_parser("example-w2d", help="W for bi-degree (2,d) with d+1 imaginary pairs")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--engine", action="store_true", help="cross-check with the general engine")
    p.set_defaults(func=cmd_example_w2d)

    p = sub.add_parser("bounds", help="lower-bound families and asymptotic reports")
    p.add_argument("kind", choices=["plane", "quadric", "pk", "mixed", "asymptotic"])
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--degrees", default="")
    p.add_argument("--mu", default="0", help="m for mixed, slope mu for asymptotic mixed")
    p.add_argument("--family", default="plane", choices=["plane", "quadric", "mixed"])
    p.add_argument("--grid", default="32,64,128,256,512,1024,2048,4096")
    p.add_argument("--csv", default=None)
    p.add_argument("--json", default=None)
    p.set_defaults(func=cmd_bounds)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "jobs", None) is None and hasattr(args, "jobs"):
        args.jobs = default_jobs()
    try:
        return args.func(args)
    except Infeasible as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (UsageError, InvalidDivisor) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
