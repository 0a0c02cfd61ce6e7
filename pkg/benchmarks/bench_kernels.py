"""Compare the compiled and pure-Python kernel backends.

Usage: python3 benchmarks/bench_kernels.py [--repeat R] [--large]

``--large`` adds the 4224-point X scheme at N = 64.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from kerdock_lab import _pykernels
from kerdock_lab.codes import build_binary_kerdock
from kerdock_lab.lattices import lattice_from_vectors
from kerdock_lab.mub.config import build_X, build_Y, build_Z
from kerdock_lab.mub.lines import code_to_lines

try:
    from kerdock_lab import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def cases(large: bool):
    out = []
    for m in (3, 5) if large else (3,):
        X = build_X(code_to_lines(build_binary_kerdock(m)))
        N = X.dim
        for name, cfg in (("Y", build_Y(X)), ("Z", build_Z(X)), ("X", X)):
            if name == "X" and m == 5 and not large:
                continue
            rp = cfg.scheme_partition()
            out.append((f"intersection_numbers {name} N={N} ({rp.n} pts)", "intersection_numbers", (rp.class_of, rp.d)))
    X16 = build_X(code_to_lines(build_binary_kerdock(3)))
    gram = lattice_from_vectors(X16.vectors).gram.astype(np.int64)
    out.append(("short_vectors BW16 norm<=16", "short_vectors", (gram, 16)))
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--large", action="store_true")
    args = ap.parse_args()
    print(f"{'kernel':48s} {'cython [s]':>11s} {'python [s]':>11s} {'speedup':>8s}")
    for label, fn_name, fargs in cases(args.large):
        py = _time(lambda: getattr(_pykernels, fn_name)(*fargs), args.repeat)
        if _ckernels is None:
            print(f"{label:48s} {'n/a':>11s} {py:11.4f} {'':>8s}")
            continue
        cy = _time(lambda: getattr(_ckernels, fn_name)(*fargs), args.repeat)
        a, b = getattr(_ckernels, fn_name)(*fargs), getattr(_pykernels, fn_name)(*fargs)
        same = np.array_equal(a[0], b[0])
        print(f"{label:48s} {cy:11.4f} {py:11.4f} {py / cy:7.1f}x" + ("" if same else "  MISMATCH"))


if __name__ == "__main__":
    main()
