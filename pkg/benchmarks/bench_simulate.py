"""Compare the jitted RK4 kernel against the pure-numpy fallback.

Run from the repository root::

    python3 benchmarks/bench_simulate.py --steps 200000 --order 8 --repeats 5

The jitted path is what ``harmosc.simulate`` uses when numba is importable
and ``HARMOSC_DISABLE_NUMBA`` is unset; the fallback is the same function
without compilation.
"""

import argparse
import time

import numpy as np

from harmosc import _accel
from harmosc._kernels import _rk4_companion_impl, rk4_companion


def make_case(steps: int, order: int, seed: int = 0):
    rng = np.random.default_rng(seed)
    # a mildly stable companion row keeps the state bounded over long runs
    a_row = -np.abs(rng.normal(scale=0.5, size=order))
    u = rng.normal(size=steps)
    jumps = np.zeros(steps)
    jumps[0] = 1.0
    c = np.zeros(order)
    c[-1] = 1.0
    return a_row, 1.0, c, u, jumps, np.zeros(order), 1e-3


def time_kernel(fn, args, repeats: int) -> float:
    fn(*args)  # warm-up (and JIT compile for the numba path)
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--steps", type=int, default=200_000)
    parser.add_argument("--order", type=int, default=8)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    case = make_case(args.steps, args.order)
    t_py = time_kernel(_rk4_companion_impl, case, args.repeats)
    print(f"pure-python kernel: {t_py:.4f} s "
          f"({args.steps / t_py / 1e6:.2f} Msteps/s)")

    if _accel.NUMBA_ENABLED:
        t_jit = time_kernel(rk4_companion, case, args.repeats)
        print(f"numba kernel:       {t_jit:.4f} s "
              f"({args.steps / t_jit / 1e6:.2f} Msteps/s)")
        print(f"speedup:            {t_py / t_jit:.1f}x")
        assert np.array_equal(rk4_companion(*case), _rk4_companion_impl(*case))
        print("outputs bit-identical: yes")
    else:
        print("numba kernel:       unavailable (disabled or not installed)")


if __name__ == "__main__":
    main()
