"""Command-line front end.

Exit codes: 0 success, 2 bad arguments, 3 no base exists, 4 verification
failure, 5 resource limit, 6 unreadable or mismatched checkpoint.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import store, tables, verify
from .basesize import (
    STRATEGIES,
    h_value,
    information_bound,
    normalize_k,
    scan,
    weight_tables,
)
from .errors import CheckpointError, InvalidArgument, NoBaseError, ResourceLimitError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NO_BASE = 3
EXIT_VERIFY_FAILED = 4
EXIT_RESOURCE = 5
EXIT_CHECKPOINT = 6


def cmd_compute(args) -> int:
    n, k = args.n, args.k
    kk = normalize_k(n, k)
    cache = None if args.no_cache else store.ResultCache()
    detail = args.trace or args.json or args.l is not None or args.weights
    hit = cache.get(n, k) if cache is not None else None
    if hit is not None and not detail:
        print(f"b({n},{k}) = {hit}")
        return EXIT_OK
    table = weight_tables(n, [kk], strategy=args.strategy, workers=args.threads)[kk]
    b, trace = scan(table)
    if cache is not None:
        cache.put(n, k, b)
    if args.json:
        doc = {"n": n, "k": k, "b": b, "method": "partition-formula",
               "trace": [[l, str(h)] for l, h in trace]}
        print(json.dumps(doc))
        return EXIT_OK
    print(f"b({n},{k}) = {b}")
    if args.trace:
        for l, h in trace:
            print(f"  l={l} h={h}")
    if args.l is not None:
        print(f"h_{args.l}({n},{k}) = {h_value(table, args.l)}")
    if args.weights:
        print("m,w")
        for m, w in table.entries.items():
            print(f"{m},{w}")
    return EXIT_OK


def cmd_table(args) -> int:
    spec = tables.TableSpec(args.kmin, args.kmax, args.nmin, args.nmax, args.fill_closed_form)
    cache = None if args.no_cache else store.ResultCache()

    def progress(n):
        logging.getLogger("bsize").info("row n=%d done", n)

    cells = tables.compute_cells(spec, cache=cache, progress=progress,
                                 checkpoint_dir=args.checkpoint_dir,
                                 strategy=args.strategy, workers=args.threads)
    if args.format == "csv":
        sys.stdout.write(tables.render_csv(cells))
    elif args.format == "json":
        sys.stdout.write(tables.render_json(cells, spec))
    else:
        sys.stdout.write(tables.render_text(cells, spec))
    return EXIT_OK


def cmd_verify(args) -> int:
    ok = True
    for rep in verify.run(args.nmax, args.suite):
        print(rep.line())
        ok &= rep.ok
    print("all suites passed" if ok else "verification FAILED")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_bench(args) -> int:
    n, k = args.n, args.k
    kk = normalize_k(n, k)
    resumed = 0
    if args.resume:
        resumed = store.load_checkpoint(args.resume, n=n, ks=[kk]).visited
    visited = 0

    def on_chunk(largest, count):
        nonlocal visited
        visited += count
        logging.getLogger("bsize").info("chunk largest=%d: %d partitions", largest, count)

    t0 = time.perf_counter()
    table = weight_tables(n, [kk], strategy=args.strategy, workers=args.threads,
                          checkpoint=args.checkpoint, resume=args.resume,
                          on_chunk=on_chunk)[kk]
    pass_time = time.perf_counter() - t0
    start = information_bound(n, kk)

    t1 = time.perf_counter()
    b, trace = scan(table)
    scan_time = time.perf_counter() - t1
    scanned = [l for l, _ in trace if l >= start]

    print(f"n={n} k={k} strategy={args.strategy} threads={args.threads}")
    if visited or resumed:
        print(f"partitions processed: {resumed + visited}"
              + (f" ({resumed} before resume)" if resumed else ""))
        if pass_time:
            print(f"partitions/second: {visited / pass_time:.0f}")
    print(f"weight pass: {pass_time:.3f} s")
    print(f"distinct fixed-subset counts: {len(table)}")
    print(f"scan: l={start}..{b}, {scan_time / max(len(scanned), 1) * 1e3:.3f} ms per l")
    print(f"b({n},{k}) = {b}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bsize",
        description="Base size of Sym(n) acting on k-subsets (determining number of K(n,k)).")
    parser.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def engine_flags(p):
        p.add_argument("--threads", type=int, default=1, help="reduction worker processes")
        p.add_argument("--strategy", choices=STRATEGIES, default="partitions",
                       help="weight-table pass (default: partitions)")

    p = sub.add_parser("compute", help="compute b(n,k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, help="also print h_l")
    p.add_argument("--trace", action="store_true", help="print every (l, h_l) visited")
    p.add_argument("--json", action="store_true", help="emit a JSON record")
    p.add_argument("--weights", action="store_true", help="dump the weight table as m,w")
    p.add_argument("--no-cache", action="store_true")
    engine_flags(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("table", help="tabulate b(n,k)")
    p.add_argument("--kmin", type=int, default=3)
    p.add_argument("--kmax", type=int, default=14)
    p.add_argument("--nmin", type=int, help="explicit range: first n (needs --nmax)")
    p.add_argument("--nmax", type=int,
                   help="last n; with --nmin an explicit range, alone it truncates the standard range")
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--fill-closed-form", action="store_true",
                   help="fill cells past floor(k(k+1)/2) from the closed form")
    p.add_argument("--checkpoint-dir", help="per-row checkpoint files for resumable long runs")
    p.add_argument("--no-cache", action="store_true")
    engine_flags(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run brute-force oracle suites")
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--suite", action="append", choices=sorted(verify.SUITES),
                   help="suite to run (repeatable; default all)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the weight-table pass")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--checkpoint", help="write progress to this JSON file after each chunk")
    p.add_argument("--resume", help="resume from this checkpoint file")
    engine_flags(p)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except NoBaseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_BASE
    except CheckpointError as exc:
        print(f"error: checkpoint: {exc}", file=sys.stderr)
        return EXIT_CHECKPOINT
    except ResourceLimitError as exc:
        print(f"error: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InvalidArgument as exc:
        print(f"error: invalid argument: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
