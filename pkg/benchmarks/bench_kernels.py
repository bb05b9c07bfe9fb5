#!/usr/bin/env python3
"""Benchmark the compiled kernels against the NumPy fallback.

Runs each kernel on identical inputs through both backends, checks the
results agree exactly, and prints a timing table.  Usage:

    python benchmarks/bench_kernels.py [--trials N]
"""

import argparse
import time

import numpy as np

from bepalloc._kernels import _py
from bepalloc.channel import RandomStream, draw_channel_matrix, draw_power_gains

try:
    from bepalloc._kernels import _core
except ImportError:
    _core = None


def _time(fn, repeats=3):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=1_000_000)
    args = parser.parse_args()

    if _core is None:
        print("compiled extension not built; only the fallback is available")
        return 1

    n = args.trials
    gen = RandomStream(2024).generator
    gain_b, gains_e = draw_power_gains(gen, n, 3)
    weights = np.array([2.7, 1.7, 4.2])
    hb_re, hb_im, he_re, he_im = draw_channel_matrix(gen, n // 4, 4, 3)
    uniforms = gen.random((n // 16, 63))

    rows = []

    for name, kern in (("outage max", "count_infeasible_max"),
                       ("outage sum", "count_infeasible_sum")):
        c_out, c_t = _time(lambda: getattr(_core, kern)(gain_b, gains_e, weights, 2.7))
        p_out, p_t = _time(lambda: getattr(_py, kern)(gain_b, gains_e, weights, 2.7))
        assert c_out == p_out, f"{name}: backends disagree ({c_out} vs {p_out})"
        rows.append((name, n, c_t, p_t))

    def run_bf(mod):
        p_total = np.empty(hb_re.shape[0])
        feasible = np.empty(hb_re.shape[0], dtype=np.uint8)
        bad = mod.beamforming_batch(
            hb_re, hb_im, he_re, he_im, 5.41, 2.71, 0.01, p_total, feasible
        )
        return bad, p_total, feasible

    (c_bad, c_p, c_f), c_t = _time(lambda: run_bf(_core))
    (p_bad, p_p, p_f), p_t = _time(lambda: run_bf(_py))
    assert c_bad == p_bad
    assert np.array_equal(c_f, p_f)
    assert np.array_equal(c_p[c_f == 1], p_p[p_f == 1])
    rows.append(("beamforming LP", hb_re.shape[0], c_t, p_t))

    c_out, c_t = _time(lambda: _core.count_block_failures(uniforms, 0.05, 1))
    p_out, p_t = _time(lambda: _py.count_block_failures(uniforms, 0.05, 1))
    assert c_out == p_out
    rows.append(("block failures", uniforms.shape[0], c_t, p_t))

    print(f"{'kernel':<16}{'trials':>10}{'cython [ms]':>14}{'numpy [ms]':>13}{'speedup':>9}")
    for name, size, c_t, p_t in rows:
        print(f"{name:<16}{size:>10}{c_t * 1e3:>14.2f}{p_t * 1e3:>13.2f}{p_t / c_t:>9.2f}x")
    print("backends agree exactly on all kernels")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
