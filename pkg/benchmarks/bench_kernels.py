"""Compare the compiled kernels with the pure-Python fallback.

Times each kernel on the same random inputs under both implementations,
then analyzes the corpus once per backend in a subprocess (the backend is
chosen at import time).

    python benchmarks/bench_kernels.py [--seed 0] [--repeat 5]
"""

from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import time
from pathlib import Path

from tarsis.automata import _kernels_py as P

try:
    from tarsis.automata import _kernels as C
except ImportError:
    C = None

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"


def random_table(rng, n, k):
    delta = [rng.randrange(-1, n) for _ in range(n * k)]
    final = [int(rng.random() < 0.3) for _ in range(n)]
    return delta, final


def random_nfa(rng, n, k):
    edges = []
    for _ in range(3 * n):
        edges += [rng.randrange(n), rng.randrange(-1, k), rng.randrange(n)]
    final = [int(rng.random() < 0.3) for _ in range(n)]
    return n, k, 0, final, edges


def workloads(rng):
    """name -> (function name, list of argument tuples)."""
    refine = []
    for _ in range(50):
        delta, final = random_table(rng, 200, 4)
        refine.append((200, 4, delta, final))
    search = []
    for _ in range(50):
        da, fa_ = random_table(rng, 60, 3)
        db, fb = random_table(rng, 60, 3)
        search.append((P.INCLUSION, 3, da, fa_, 0, db, fb, 0))
    det = [random_nfa(rng, 12, 3) for _ in range(200)]
    return {
        "refine_partition": ("refine_partition", refine),
        "product_search": ("product_search", search),
        "det_min": ("det_min", det),
    }


def time_kernel(module, fname, cases, repeat):
    fn = getattr(module, fname)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for args in cases:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


CORPUS_SCRIPT = """
import json, sys, time
from pathlib import Path
from tarsis.analysis import AnalysisConfig, abstract_run
from tarsis.automata import BACKEND
from tarsis.imp import parse
out = {"backend": BACKEND}
for name in sys.argv[2:]:
    prog = parse((Path(sys.argv[1]) / (name + ".imp")).read_text())
    t0 = time.perf_counter()
    abstract_run(prog, AnalysisConfig(domain="tarsis"))
    out[name] = time.perf_counter() - t0
print(json.dumps(out))
"""


def corpus_times(pure: bool, programs):
    env = dict(os.environ)
    env.pop("TARSIS_PURE_PYTHON", None)
    if pure:
        env["TARSIS_PURE_PYTHON"] = "1"
    r = subprocess.run([sys.executable, "-c", CORPUS_SCRIPT, str(CORPUS), *programs],
                       capture_output=True, text=True, env=env, check=True)
    return json.loads(r.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    if C is None:
        print("compiled kernels are not built; nothing to compare", file=sys.stderr)
        return 1

    rng = random.Random(args.seed)
    print(f"{'kernel':<18}{'cython ms':>12}{'python ms':>12}{'speedup':>10}")
    for name, (fname, cases) in workloads(rng).items():
        tc = time_kernel(C, fname, cases, args.repeat)
        tp = time_kernel(P, fname, cases, args.repeat)
        print(f"{name:<18}{tc * 1e3:>12.2f}{tp * 1e3:>12.2f}{tp / tc:>9.1f}x")

    programs = ["subs", "loop", "count", "tostring"]
    fast = corpus_times(False, programs)
    slow = corpus_times(True, programs)
    print()
    print(f"{'program':<18}{fast['backend'] + ' ms':>12}{slow['backend'] + ' ms':>12}{'speedup':>10}")
    for name in programs:
        print(f"{name:<18}{fast[name] * 1e3:>12.2f}{slow[name] * 1e3:>12.2f}{slow[name] / fast[name]:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
