"""Hot numeric kernels.

The classical fixed-step RK4 loop over a companion-form system is the
dominant cost of the package.  It is compiled with numba when available;
``HARMOSC_DISABLE_NUMBA=1`` selects the identical pure-numpy code path.
"""

import numpy as np

from ._accel import maybe_jit


def _rk4_companion_impl(a_row, b0, c, u, jumps, x0, dt):
    """Integrate x' = Ax + Bu for a companion-form A, output y = c.x.

    a_row : first row of A (remaining rows are the shift sub-diagonal)
    b0    : first entry of B (the rest are zero)
    u     : input samples, zero-order-held over each step
    jumps : impulse areas aligned with the sample grid; jumps[k] adds
            b0*jumps[k] to the first state at sample k
    """
    n = a_row.shape[0]
    m = u.shape[0]
    y = np.empty(m)
    x = x0.copy()
    k1 = np.empty(n)
    k2 = np.empty(n)
    k3 = np.empty(n)
    k4 = np.empty(n)
    xt = np.empty(n)
    half = 0.5 * dt
    sixth = dt / 6.0
    for s in range(m):
        x[0] += b0 * jumps[s]
        y[s] = np.dot(c, x)
        if s == m - 1:
            break
        uv = u[s]
        k1[0] = np.dot(a_row, x) + b0 * uv
        k1[1:] = x[: n - 1]
        xt[:] = x + half * k1
        k2[0] = np.dot(a_row, xt) + b0 * uv
        k2[1:] = xt[: n - 1]
        xt[:] = x + half * k2
        k3[0] = np.dot(a_row, xt) + b0 * uv
        k3[1:] = xt[: n - 1]
        xt[:] = x + dt * k3
        k4[0] = np.dot(a_row, xt) + b0 * uv
        k4[1:] = xt[: n - 1]
        x[:] = x + sixth * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return y


rk4_companion = maybe_jit(_rk4_companion_impl)
