"""Time representative workloads under the gmpy2 and pure-Python backends.

    python benchmarks/bench_backends.py [--repeat N]

Each backend runs in a fresh interpreter because the backend is fixed at
import time by ``NILGEO_BACKEND``.
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, sys, time
import nilgeo
from nilgeo import catalog
from nilgeo.checks import check_algebra
from nilgeo.classify import naturally_reductive_structure
from nilgeo.isospectral import NilmanifoldData, gordon_wilson

repeat = int(sys.argv[1])
nj, njp = catalog.paper_nj(), catalog.paper_njprime()
jobs = {
    "oracle sweep n(j)": lambda: check_algebra(catalog.paper_nj()),
    "nr solver n(j)": lambda: naturally_reductive_structure(catalog.paper_nj()),
    "isospec sampled": lambda: gordon_wilson(NilmanifoldData.with_defaults(catalog.paper_nj()),
                                             NilmanifoldData.with_defaults(catalog.paper_njprime()),
                                             "sampled", 16),
    "oracle sweep random 6x3": lambda: check_algebra(catalog.random_algebra(1, 6, 3, 7)),
}
out = {"backend": nilgeo.BACKEND}
for name, fn in jobs.items():
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    out[name] = best
print(json.dumps(out))
"""


def run(backend: str, repeat: int) -> dict:
    env = dict(os.environ, NILGEO_BACKEND=backend)
    res = subprocess.run([sys.executable, "-c", WORKLOAD, str(repeat)], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    fast, slow = run("", args.repeat), run("python", args.repeat)
    print(f"{'workload':<28}{fast['backend']:>12}{slow['backend']:>12}{'speedup':>10}")
    for key in fast:
        if key == "backend":
            continue
        print(f"{key:<28}{fast[key]:>11.3f}s{slow[key]:>11.3f}s{slow[key] / fast[key]:>9.2f}x")


if __name__ == "__main__":
    main()
