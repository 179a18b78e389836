"""Time the search kernels compiled with numba against the plain-Python fallback.

    python3 benchmarks/bench_kernels.py [--n 9] [--repeat 3]

Each arm runs in its own interpreter so the OUTERTURAN_NO_JIT flag takes
effect at import time. Compile time is excluded by a warm-up call.
"""

import argparse
import json
import os
import subprocess
import sys
import time

WORKLOAD = """
import json, sys, time
from outerturan import _kernels as K
from outerturan.doublestar import S22
from outerturan.extremal import enumerate_mops, max_free_subgraph

n, repeat = int(sys.argv[1]), int(sys.argv[2])
mops = list(enumerate_mops(n))
max_free_subgraph(mops[0], S22, require_connected=True)  # warm-up / compile

def search():
    return [max_free_subgraph(m, S22, require_connected=True)[0] for m in mops]

def subsets():
    total = 0
    for m in enumerate_mops(min(n, 8)):
        eu, ev = K.edge_arrays(m.edges())
        total += len(K.enumerate_subsets(m.n, eu, ev, 2, 2, True, K.CONN_CONNECTED))
    return total

out = {"jit": K.JIT}
for name, fn in (("branch_and_bound", search), ("subset_enumeration", subsets)):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        value = fn()
        times.append(time.perf_counter() - t)
    out[name] = {"best_s": min(times), "result": value if isinstance(value, int) else max(value)}
print(json.dumps(out))
"""


def run_arm(no_jit: bool, n: int, repeat: int) -> dict:
    env = dict(os.environ, OUTERTURAN_NO_JIT="1" if no_jit else "0")
    proc = subprocess.run([sys.executable, "-c", WORKLOAD, str(n), str(repeat)], env=env,
                          capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=9)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    start = time.perf_counter()
    fast = run_arm(False, args.n, args.repeat)
    plain = run_arm(True, args.n, args.repeat)
    print(f"n={args.n} repeat={args.repeat}")
    print(f"{'kernel':<20}{'numba s':>10}{'python s':>11}{'speedup':>9}  result")
    for name in ("branch_and_bound", "subset_enumeration"):
        a, b = fast[name], plain[name]
        assert a["result"] == b["result"], "arms disagree"
        print(f"{name:<20}{a['best_s']:>10.4f}{b['best_s']:>11.4f}"
              f"{b['best_s'] / max(a['best_s'], 1e-9):>8.1f}x  {a['result']}")
    print(f"total wall time {time.perf_counter() - start:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
