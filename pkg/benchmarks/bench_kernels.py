"""Time the numba and numpy kernel backends on a real element array.

    python3 benchmarks/bench_kernels.py [--triple s3c2m3] [--repeat 5]

The element array is the vertex stabiliser H of a construction triple, so
row counts match what the classifiers and centraliser filters see.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from symx import _kernels
from symx.construction import DEFAULT_TRIPLES, build_groups, default_params
from symx.perm import _inv


def _time(fn, repeat: int) -> float:
    fn()  # warm-up (includes numba compilation on first call)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--triple", default="s3c2m3", choices=sorted(DEFAULT_TRIPLES))
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    numba_impl = _kernels.load_numba()
    if numba_impl is None:
        print("numba is not importable; only the numpy backend can be timed")
    H = build_groups(default_params(args.triple)).H
    elems = H.element_array()
    g = np.asarray(H.generators[0], dtype=_kernels.DTYPE)
    ginv = np.asarray(_inv(H.generators[0]), dtype=_kernels.DTYPE)
    gens = _kernels.as_rows([tuple(x) for x in H.generators[:3]])
    reps = elems[:8]
    chain = H._chain_arrays()
    print(f"{args.triple}: {elems.shape[0]} elements of degree {elems.shape[1]}")

    cases = {
        "expand_products": lambda m: m.expand_products(elems[:20000], reps),
        "commute_mask": lambda m: m.commute_mask(elems, gens),
        "conjugate_rows": lambda m: m.conjugate_rows(elems, g, ginv),
        "sift_rank": lambda m: m.sift_rank(elems, chain[0], chain[1], chain[3], chain[4]),
        "cycle_lengths": lambda m: m.cycle_lengths(elems),
    }
    print(f"{'kernel':18s} {'numpy (ms)':>11s} {'numba (ms)':>11s} {'speed-up':>9s}")
    for name, call in cases.items():
        t_np = _time(lambda: call(_kernels.numpy_impl), args.repeat)
        if numba_impl is None:
            print(f"{name:18s} {t_np * 1e3:11.2f} {'-':>11s} {'-':>9s}")
            continue
        a, b = call(_kernels.numpy_impl), call(numba_impl)
        assert np.array_equal(a, b), f"backends disagree on {name}"
        t_nb = _time(lambda: call(numba_impl), args.repeat)
        print(f"{name:18s} {t_np * 1e3:11.2f} {t_nb * 1e3:11.2f} {t_np / t_nb:8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
