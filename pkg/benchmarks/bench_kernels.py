"""Compare the compiled kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --repeat 5 --format csv
"""

from __future__ import annotations

import argparse
import csv
import sys
import time

import numpy as np

from seqcorr import _purepy
from seqcorr.algebra import Gf2Poly
from seqcorr.correlation import _aligned
from seqcorr.sequences import legendre_sequence, m_sequence

try:
    from seqcorr import _kernels
except ImportError:
    _kernels = None


def _cases():
    m = lambda e: m_sequence(Gf2Poly.parse(e))  # noqa: E731
    yield "arith  L17 x L29, all lags (N=493)", "arith", legendre_sequence(17), legendre_sequence(29), None
    yield "arith  m7 x m8, 64 lags (N=32385)", "arith", m("x^7+x^6+1"), m("x^8+x^6+x^5+x^4+1"), 64
    yield "arith  m10 auto, all lags (N=1023)", "arith", m("x^10+x^3+1"), m("x^10+x^3+1"), None
    yield "class  m7 x m8, 64 lags (N=32385)", "classical", m("x^7+x^6+1"), m("x^8+x^6+x^5+x^4+1"), 64
    yield "pattern m5 x m8, k=3 (N=7905)", "pattern", m("x^5+x^3+1"), m("x^8+x^6+x^5+x^4+1"), 3


def _call(mod, kind, a, b, arg):
    if kind == "pattern":
        k = arg
        rows = np.vstack([a, b])
        src = np.array([0] * (k + 1) + [1] * (k + 1), dtype=np.int64)
        offsets = np.array(list(range(-k, 1)) * 2, dtype=np.int64)
        return mod.pattern_counts(rows, src, offsets)
    lags = np.arange(a.size if arg is None else arg, dtype=np.int64)
    fn = mod.arith_profile if kind == "arith" else mod.classical_profile
    return fn(a, b, lags)


def _best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3, help="best of this many runs")
    parser.add_argument("--format", choices=("text", "csv"), default="text")
    args = parser.parse_args(argv)
    if _kernels is None:
        print("compiled kernels are not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 2

    rows = []
    for label, kind, s, t, arg in _cases():
        a, b = _aligned(s, t)
        tp, out_p = _best(lambda: _call(_purepy, kind, a, b, arg), args.repeat)
        tc, out_c = _best(lambda: _call(_kernels, kind, a, b, arg), args.repeat)
        if not np.array_equal(np.asarray(out_p), np.asarray(out_c)):
            print(f"backends disagree on {label}", file=sys.stderr)
            return 1
        rows.append((label, tp * 1e3, tc * 1e3, tp / tc if tc else float("inf")))

    if args.format == "csv":
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["case", "python_ms", "cython_ms", "speedup"])
        w.writerows((r[0], f"{r[1]:.3f}", f"{r[2]:.3f}", f"{r[3]:.1f}") for r in rows)
    else:
        print(f"{'case':<38} {'python ms':>11} {'cython ms':>11} {'speedup':>8}")
        for label, tp, tc, sp in rows:
            print(f"{label:<38} {tp:>11.2f} {tc:>11.3f} {sp:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
