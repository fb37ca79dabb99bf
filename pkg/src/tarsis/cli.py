"""Command-line driver: ``analyze``, ``run`` and ``bench``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from pathlib import Path

from .analysis.abstract import abstract_run
from .analysis.concrete import Inputs, concrete_run
from .analysis.config import AnalysisConfig
from .analysis.report import build_report
from .errors import ConcreteError, Diverged, OutOfFuel
from .imp import ImpSyntaxError, parse
from .values.string_domains import DOMAINS

EXIT_OK, EXIT_ALARM, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
GOLDEN = "golden.json"


def _load(path: str):
    text = Path(path).read_text(encoding="utf-8")
    return parse(text)


def _config(args) -> AnalysisConfig:
    cfg = AnalysisConfig()
    if args.config:
        cfg = AnalysisConfig.from_json(Path(args.config).read_text(encoding="utf-8"))
    overrides = {
        "domain": args.domain,
        "widening_n": args.widening_n,
        "tau": args.tau,
        "partition_bound": args.partition_bound,
        "format": args.format,
    }
    return replace(cfg, **{k: v for k, v in overrides.items() if v is not None})


def cmd_analyze(args) -> int:
    cfg = _config(args)
    program = _load(args.file)
    result = abstract_run(program, cfg)
    report = build_report(result, args.file, cfg.domain)
    if cfg.format == "json":
        print(report.to_json(args.time))
    else:
        print(report.to_text(args.time))
    return EXIT_ALARM if report.definite else EXIT_OK


def _parse_scalar(text: str):
    if text in ("true", "false"):
        return text == "true"
    try:
        return int(text)
    except ValueError:
        pass
    if len(text) >= 2 and text[0] == text[-1] == '"':
        return json.loads(text)
    return text


def parse_inputs(pairs) -> tuple:
    """Split ``k=v`` pairs into an :class:`Inputs` and an initial memory.

    ``read`` and ``nondet`` keys queue values for those intrinsics, in the
    order given; every other key binds a variable.
    """
    reads, nondets, mem = [], [], {}
    for pair in pairs or ():
        if "=" not in pair:
            raise ValueError(f"input {pair!r} is not of the form key=value")
        key, raw = pair.split("=", 1)
        if key == "read":
            v = _parse_scalar(raw)
            reads.append(v if isinstance(v, str) else raw)
        elif key == "nondet":
            if raw not in ("true", "false"):
                raise ValueError(f"nondet input must be true or false, got {raw!r}")
            nondets.append(raw == "true")
        else:
            mem[key] = _parse_scalar(raw)
    return Inputs(reads, nondets), mem


def _show_concrete(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, str):
        return json.dumps(v, ensure_ascii=False)
    return str(v)


def cmd_run(args) -> int:
    program = _load(args.file)
    try:
        inputs, mem = parse_inputs(args.input)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        res = concrete_run(program, mem, args.fuel, inputs)
    except (ConcreteError, OutOfFuel) as e:
        print(f"runtime error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_ALARM
    for name, v in res.memory.items():
        print(f"{name}={_show_concrete(v)}")
    for line, col in res.failed_asserts:
        print(f"assertion failed at {line}:{col}")
    return EXIT_ALARM if res.failed_asserts else EXIT_OK


def _bench_one(job):
    path, domain, repeat = job
    program = _load(path)
    best = float("inf")
    verdicts = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = abstract_run(program, AnalysisConfig(domain=domain))
        best = min(best, (time.perf_counter() - t0) * 1000.0)
        verdicts = [r.verdict for r in result.asserts]
    return path, domain, best, verdicts


def cmd_bench(args) -> int:
    root = Path(args.dir)
    files = sorted(str(p) for p in root.glob("*.imp"))
    if not files:
        print(f"error: no .imp files in {root}", file=sys.stderr)
        return EXIT_USAGE
    domains = args.domains or list(DOMAINS)
    jobs = [(f, d, args.repeat) for f in files for d in domains]
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            rows = list(pool.map(_bench_one, jobs))
    else:
        rows = [_bench_one(j) for j in jobs]
    golden_path = root / GOLDEN
    golden = json.loads(golden_path.read_text(encoding="utf-8")) if golden_path.exists() else {}

    times = {(f, d): ms for f, d, ms, _ in rows}
    names = [Path(f).stem for f in files]
    width = max(8, *(len(n) for n in names)) + 2
    print("domain".ljust(16) + "".join(n.rjust(width) for n in names))
    for d in domains:
        cells = "".join(f"{times[(f, d)]:.1f} ms".rjust(width) for f in files)
        print(d.ljust(16) + cells)

    mismatches = []
    for f, d, _, verdicts in rows:
        want = golden.get(Path(f).stem, {}).get(d)
        if want is not None and want != verdicts:
            mismatches.append((Path(f).stem, d, want, verdicts))
    if golden:
        print()
        if mismatches:
            for name, d, want, got in mismatches:
                print(f"verdict mismatch: {name} [{d}] expected {want}, got {got}")
        else:
            print("verdicts match golden files")
    return EXIT_ALARM if mismatches else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tarsis", description="String analysis for IMP programs")
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="run the abstract interpreter")
    a.add_argument("file")
    a.add_argument("--domain", choices=DOMAINS)
    a.add_argument("--widening-n", type=int)
    a.add_argument("--tau", type=int)
    a.add_argument("--partition-bound", type=int)
    a.add_argument("--format", choices=("text", "json"))
    a.add_argument("--time", action="store_true", help="include analysis time")
    a.add_argument("--config", help="JSON file with analysis settings; flags override it")
    a.set_defaults(func=cmd_analyze)

    r = sub.add_parser("run", help="execute concretely")
    r.add_argument("file")
    r.add_argument("--input", action="append", metavar="KEY=VALUE",
                   help="read=..., nondet=true|false, or an initial variable; repeatable")
    r.add_argument("--fuel", type=int, default=1_000_000)
    r.set_defaults(func=cmd_run)

    b = sub.add_parser("bench", help="time every domain on a directory of programs")
    b.add_argument("dir")
    b.add_argument("--domains", nargs="+", choices=DOMAINS)
    b.add_argument("--repeat", type=int, default=3)
    b.add_argument("--jobs", type=int, default=1)
    b.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ImpSyntaxError as e:
        print(f"{args.file}:{e}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Diverged as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
