"""Time the compiled sampling kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--samples N] [--repeat R]
"""

import argparse
import timeit

import numpy as np

from indevents import kernels


def cases(n_samples):
    probs = np.array([1 / k for k in range(2, 10)], dtype=np.float64)
    lo = np.array([0.0, 0.3, 0.6]), np.array([0.2, 0.5, 0.75])
    rect = tuple(np.array(v) for v in ([0.0, 0.5], [0.5, 1.0], [0.0, 0.0], [0.75, 0.25]))
    return {
        "first_hits (8 events)": lambda k: k.first_hits(1, 0, 0, n_samples, probs),
        "strip_hits (3 strips)": lambda k: k.strip_hits(1, 0, 0, n_samples, *lo),
        "rect_hits (2 rects)": lambda k: k.rect_hits(1, 0, 0, n_samples, *rect),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=1_000_000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    names = sorted(kernels.BACKENDS)
    if "cython" not in names:
        print("compiled extension not built; only the python backend is timed")
    print(f"{'kernel':24s}" + "".join(f"{n:>12s}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, fn in cases(args.samples).items():
        best = {n: min(timeit.repeat(lambda: fn(kernels.BACKENDS[n]), number=1, repeat=args.repeat)) for n in names}
        row = f"{label:24s}" + "".join(f"{best[n] * 1e3:10.1f}ms" for n in names)
        if len(names) > 1:
            row += f"{best['python'] / best['cython']:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
