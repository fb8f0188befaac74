"""Compare the compiled kernels against the numpy fallback.

Run with ``python benchmarks/bench_kernels.py``. The patch shapes match the
16-channel convolution of a default GridCleanup learner step (16 envs x 33
steps x 4 agents on a padded 13 x 18 grid).
"""
from __future__ import annotations

import argparse
import timeit

import numpy as np

from agentcentric import _kernels

def bench(fn, repeat, number):
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--batch", type=int, default=2112, help="images (envs x (unroll+1) x agents)")
    args = ap.parse_args(argv)
    if _kernels.BACKEND != "cython":
        print("compiled extension not built; only the fallback can be timed")
    rng = np.random.default_rng(0)
    backends = ["python"] + (["cython"] if _kernels.BACKEND == "cython" else [])
    print(f"{'kernel':<18}{'dtype':<9}" + "".join(f"{b:>12}" for b in backends) + "   speedup")
    for dtype in (np.float32, np.float64):
        shape = (args.batch, 13, 18, 16)
        xp = rng.standard_normal(shape).astype(dtype)
        k, (oh, ow) = 3, (11, 16)
        cols = _kernels.im2col(xp, k, k, oh, ow, backend="python")
        rows = {
            "im2col": {b: (lambda b=b: _kernels.im2col(xp, k, k, oh, ow, backend=b)) for b in backends},
            "col2im": {b: (lambda b=b: _kernels.col2im(cols, k, k, shape[-1], shape[1], shape[2], backend=b))
                       for b in backends},
        }
        for name, fns in rows.items():
            times = {b: bench(f, args.repeat, 1) for b, f in fns.items()}
            speed = f"{times['python'] / times['cython']:9.1f}x" if "cython" in times else ""
            print(f"{name:<18}{np.dtype(dtype).name:<9}" + "".join(f"{times[b]:11.4f}s" for b in backends)
                  + "   " + speed)
    T, B = 32, 64
    deltas, disc, cs = (rng.standard_normal((T, B)), np.full((T, B), 0.99), rng.uniform(0, 1, (T, B)))
    times = {b: bench(lambda b=b: _kernels.vtrace_scan(deltas, disc, cs, backend=b), args.repeat, 200)
             for b in backends}
    speed = f"{times['python'] / times['cython']:9.1f}x" if "cython" in times else ""
    print(f"{'vtrace_scan':<18}{'float64':<9}" + "".join(f"{times[b]:11.6f}s" for b in backends) + "   " + speed)


if __name__ == "__main__":
    main()
