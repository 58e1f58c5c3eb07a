"""Time the diagram and Brauer kernels with numba on and off.

Each path runs in its own interpreter so the environment flag is read at
import time.  Usage::

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, time
import numpy as np
from deligne_o import _kernels as K
from deligne_o.partition import partitions_up_to

parts = [np.asarray(lam.transpose(), dtype=np.int64) for lam in partitions_up_to(12)]
deltas = range(-6, 7)

def diagrams():
    n = 0
    for d in deltas:
        for colt in parts:
            nv = (colt[0] if len(colt) else 0) + len(colt) + abs(d) + 2
            m = K.weight_marks(colt, d, nv)
            n += K.cap_pairs(m, False).shape[0]
            K.columns_from_marks(m, d)
    return n

def brauer():
    idx, bub = K.composition_table(4, 105)
    return int(bub.sum())

out = {"numba": K.NUMBA_ENABLED}
for name, fn in (("diagrams", diagrams), ("brauer_B4_table", brauer)):
    t = time.perf_counter(); fn(); first = time.perf_counter() - t
    best = float("inf")
    for _ in range(REPEAT):
        t = time.perf_counter(); fn(); best = min(best, time.perf_counter() - t)
    out[name] = {"first_call": first, "best": best}
print(json.dumps(out))
"""


def run(disable: bool, repeat: int) -> dict:
    env = dict(os.environ)
    if disable:
        env["DELIGNE_O_DISABLE_NUMBA"] = "1"
    else:
        env.pop("DELIGNE_O_DISABLE_NUMBA", None)
    code = WORKLOAD.replace("REPEAT", str(repeat))
    res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    fast, pure = run(False, args.repeat), run(True, args.repeat)
    if not fast["numba"]:
        print("numba unavailable; both runs used the plain path")
    print(f"{'kernel':<18}{'numba best':>12}{'plain best':>12}{'speedup':>10}{'numba 1st':>12}")
    for name in ("diagrams", "brauer_B4_table"):
        a, b = fast[name], pure[name]
        print(f"{name:<18}{a['best']:>11.4f}s{b['best']:>11.4f}s{b['best'] / a['best']:>9.1f}x{a['first_call']:>11.4f}s")


if __name__ == "__main__":
    main()
