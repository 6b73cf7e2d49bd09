"""Compare the compiled and numpy simplex kernels on clearing LPs.

    python3 benchmarks/bench_simplex.py [--hours N] [--repeat K]
"""

import argparse
import statistics
import time

import numpy as np

from rts96.case import build_system
from rts96.clearing import build_nodal_lp
from rts96.lp import kernels, solve
from rts96.timeseries import generate_year, synth_wind


def _time(problems, repeat):
    best = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        sols = [solve(p) for p in problems]
        best.append(time.perf_counter() - t0)
    return min(best), sols


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--hours", type=int, default=24)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    case = build_system()
    series = generate_year(case, 42, synth_wind(42))
    hours = np.linspace(0, 8759, args.hours).astype(int)
    problems = [build_nodal_lp(case, int(h), series) for h in hours]
    print(f"{len(problems)} nodal LPs, {problems[0].n_rows} rows x {problems[0].n_vars} columns")

    timings, objectives = {}, {}
    for name in sorted(kernels.AVAILABLE):
        with kernels.use(name):
            elapsed, sols = _time(problems, args.repeat)
        timings[name] = elapsed
        objectives[name] = [s.objective for s in sols]
        its = statistics.mean(s.iterations for s in sols)
        print(f"{name:>8}: {elapsed:8.3f} s total, {1e3 * elapsed / len(problems):7.1f} ms/LP, {its:.0f} pivots/LP")

    if "cython" in timings:
        diff = max(abs(a - b) for a, b in zip(objectives["python"], objectives["cython"]))
        print(f"speedup: {timings['python'] / timings['cython']:.2f}x, max objective difference {diff:.1e}")
    else:
        print("compiled kernel not built; only the numpy fallback was timed")


if __name__ == "__main__":
    main()
