"""Compare the numba and numpy kernel backends on the worked examples and a sweep slice.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--json-out bench.json]

Each case is run once per backend to warm up (JIT cache load for numba), then
timed ``--repeat`` times; the best time is reported.  Results must agree
between backends, otherwise the script exits with status 1.
"""

from __future__ import annotations

import argparse
import json
import time

from pairmds.construct import build
from pairmds.sympair import analyze

CASES = [
    # (label, theorem, q, n, strategy)
    ("ex3.1 message", "3.1", 4, 4, "message"),
    ("ex3.2 message", "3.2", 7, 4, "message"),
    ("ex3.3 message", "3.3", 7, 5, "message"),
    ("ex3.3 support", "3.3", 7, 5, "support"),
    ("ex3.4 support", "3.4", 5, 5, "support"),
    ("ex3.5 support", "3.5", 9, 6, "support"),
    ("T3.1 q=13 n=13", "3.1", 13, 13, "support"),
    ("T3.4 q=13 n=13", "3.4", 13, 13, "support"),
    ("T3.5 q=9 n=9", "3.5", 9, 9, "support"),
]


def best_time(fn, repeat: int) -> tuple[float, object]:
    fn()
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json-out", default=None)
    args = ap.parse_args(argv)

    rows = []
    agree = True
    print(f"{'case':<18} {'numba s':>9} {'numpy s':>9} {'speedup':>8}  d_H d_sp")
    for label, tid, q, n, strategy in CASES:
        C = build(tid, q, n)
        times, reports = {}, {}
        for backend in ("numba", "numpy"):
            times[backend], reports[backend] = best_time(
                lambda b=backend: analyze(C, strategy=strategy, backend=b), args.repeat)
        a, b = reports["numba"], reports["numpy"]
        same = (a.d_H, a.d_sp, a.witness_H, a.witness_sp) == (b.d_H, b.d_sp, b.witness_H, b.witness_sp)
        agree &= same
        speedup = times["numpy"] / times["numba"] if times["numba"] else float("inf")
        print(f"{label:<18} {times['numba']:>9.4f} {times['numpy']:>9.4f} {speedup:>7.1f}x  "
              f"{a.d_H:>3} {a.d_sp:>4}{'' if same else '  MISMATCH'}")
        rows.append({"case": label, "theorem": tid, "q": q, "n": n, "strategy": strategy,
                     "numba_s": times["numba"], "numpy_s": times["numpy"],
                     "d_H": a.d_H, "d_sp": a.d_sp, "backends_agree": same})
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=1)
    return 0 if agree else 1


if __name__ == "__main__":
    raise SystemExit(main())
