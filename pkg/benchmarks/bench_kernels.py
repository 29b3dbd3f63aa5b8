"""Compare the compiled kernels with the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

The first table times each kernel on a realistic input. The second times
an end-to-end workload in a fresh interpreter with and without
``RAYMATE_PURE_PYTHON``.
"""

import argparse
import os
import subprocess
import sys
import timeit
from fractions import Fraction

from raymate import _pykernels as py
from raymate import angles as ang

try:
    from raymate import _ckernels as cy
except ImportError:  # extension not built
    cy = None

# a slice of the obstruction sweep: graph building dominates
END_TO_END = (
    "from raymate import mating, parameter\n"
    "ds = parameter.all_descriptors(6)\n"
    "for a in ds[:6]:\n"
    "    for b in ds:\n"
    "        mating.obstruction_report(a, b, with_cluster=False, check=False)\n"
)


def kernel_inputs():
    # the reference angle has period 8, so its layer contains starred rows
    d, r = 2, 8
    ref = Fraction(86, 255)
    nums = ang.layer_numerators(d, r)
    codes = py.itinerary_codes(nums, r, d, ref.numerator, ref.denominator)
    starred = [i for i, row in enumerate(codes) if py.STAR in row]
    big = ang.layer_numerators(d, 12)
    us = list(range(len(big)))
    vs = [(7 * i + 3) % len(big) for i in us]
    return {
        "itinerary_codes": lambda k: k.itinerary_codes(big, 12, d, ref.numerator, ref.denominator),
        "star_matches": lambda k: k.star_matches(codes, codes, starred),
        "components": lambda k: k.components(len(big), us, vs),
    }


def bench_kernels(repeat):
    rows = []
    for name, call in kernel_inputs().items():
        t_py = min(timeit.repeat(lambda: call(py), number=1, repeat=repeat))
        t_cy = min(timeit.repeat(lambda: call(cy), number=1, repeat=repeat)) if cy else None
        rows.append((name, t_py, t_cy))
    return rows


def bench_end_to_end():
    out = {}
    for label, extra in (("compiled", {}), ("python", {"RAYMATE_PURE_PYTHON": "1"})):
        env = {k: v for k, v in os.environ.items() if k != "RAYMATE_PURE_PYTHON"}
        env.update(extra)
        code = "import time; t = time.perf_counter()\n" + END_TO_END + "print(time.perf_counter() - t)"
        res = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        out[label] = float(res.stdout.strip())
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    print(f"compiled kernels: {'available' if cy else 'not built'}")
    print(f"{'kernel':18} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, t_py, t_cy in bench_kernels(args.repeat):
        if t_cy is None:
            print(f"{name:18} {t_py:10.4f} {'-':>11} {'-':>8}")
        else:
            print(f"{name:18} {t_py:10.4f} {t_cy:11.4f} {t_py / t_cy:7.1f}x")
    e2e = bench_end_to_end()
    print(f"end to end: compiled {e2e['compiled']:.2f} s, python {e2e['python']:.2f} s")


if __name__ == "__main__":
    main()
