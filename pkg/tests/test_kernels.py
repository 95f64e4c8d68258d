import subprocess
import sys

import numpy as np
import pytest

from harmosc import _accel
from harmosc._kernels import _rk4_companion_impl, rk4_companion


def _random_case(seed, n_steps=500, order=4):
    rng = np.random.default_rng(seed)
    a_row = rng.normal(scale=0.5, size=order)
    u = rng.normal(size=n_steps)
    jumps = np.zeros(n_steps)
    jumps[rng.integers(0, n_steps, size=3)] = rng.normal(size=3)
    x0 = rng.normal(size=order)
    c = np.zeros(order)
    c[-1] = 1.0
    return a_row, 1.0, c, u, jumps, x0, 0.01


@pytest.mark.skipif(not _accel.NUMBA_ENABLED, reason="numba disabled or missing")
def test_jitted_matches_pure_python():
    for seed in range(5):
        args = _random_case(seed)
        assert np.array_equal(rk4_companion(*args), _rk4_companion_impl(*args))


def test_pure_python_reference_values():
    # order-1 decay y' = -y with y(0)=1: one RK4 step reproduces the
    # 4th-order Taylor expansion of exp(-dt)
    a_row = np.array([-1.0])
    c = np.array([1.0])
    u = np.zeros(3)
    jumps = np.array([1.0, 0.0, 0.0])
    dt = 0.1
    y = _rk4_companion_impl(a_row, 1.0, c, u, jumps, np.zeros(1), dt)
    taylor = 1.0 - dt + dt**2 / 2 - dt**3 / 6 + dt**4 / 24
    assert y[0] == 1.0
    assert y[1] == pytest.approx(taylor, rel=1e-15)
    assert y[2] == pytest.approx(taylor**2, rel=1e-14)


def test_env_flag_disables_numba():
    code = (
        "import os; os.environ['HARMOSC_DISABLE_NUMBA'] = '1'\n"
        "from harmosc import _accel, _kernels\n"
        "assert not _accel.NUMBA_ENABLED\n"
        "assert not hasattr(_kernels.rk4_companion, 'py_func')\n"
    )
    subprocess.run([sys.executable, "-c", code], check=True)
