"""Pure-Python (numpy) growth-rate kernels.

These are the innermost loops of the package: every pricing solver and the
brute-force oracle reduce to evaluating

    g(z) = sum_i p_i * log(h_i * z / u - z + 1)

for many values of z.  A Cython twin of this module (``_core_cy``) is built
when a compiler is available; ``growthprice._core`` picks whichever imports.
Both backends must agree to floating-point roundoff; see
tests/test_core_backends.py.
"""

import numpy as np

BACKEND = "python"

# Relative pullback from the log-domain boundary sup{z : all args > 0}.
EDGE_MARGIN = 1e-12


def log_growth(payoffs, probs, u, z):
    """Mean log wealth relative at price u and investment fraction z.

    Returns -inf when any outcome with positive probability has
    h*z/u - z + 1 <= 0 (z beyond the admissible region).
    """
    payoffs = np.asarray(payoffs, dtype=float)
    probs = np.asarray(probs, dtype=float)
    live = probs > 0.0
    args = payoffs[live] * (z / u) - z + 1.0
    if np.any(args <= 0.0):
        return -np.inf
    return float(np.dot(probs[live], np.log(args)))


def admissible_fraction_sup(payoffs, probs, u):
    """sup{z >= 0 : h_i*z/u - z + 1 > 0 for every live outcome}.

    The bound is u/(u - h_min) when some live payoff is below u, else +inf.
    """
    payoffs = np.asarray(payoffs, dtype=float)
    probs = np.asarray(probs, dtype=float)
    live = payoffs[probs > 0.0]
    h_min = float(live.min())
    if h_min >= u:
        return np.inf
    return u / (u - h_min)


def sup_log_growth_scan(payoffs, probs, u, n_z):
    """Dense-scan maximization of the mean log growth over z.

    Scans n_z evenly spaced fractions on [0, z_hi] where z_hi is the
    admissible cap min(1, sup)(1 - EDGE_MARGIN).  Returns (z_best, g_best)
    with g_best the mean log growth (not exponentiated).
    """
    payoffs = np.asarray(payoffs, dtype=float)
    probs = np.asarray(probs, dtype=float)
    live = probs > 0.0
    h = payoffs[live]
    p = probs[live]

    z_sup = admissible_fraction_sup(payoffs, probs, u)
    z_hi = min(1.0, z_sup * (1.0 - EDGE_MARGIN))
    z = np.linspace(0.0, z_hi, n_z)

    # args[i, k] = h_i * z_k / u - z_k + 1
    args = 1.0 + np.outer(h / u - 1.0, z)
    with np.errstate(divide="ignore", invalid="ignore"):
        logs = np.log(args)
    logs[args <= 0.0] = -np.inf
    g = p @ logs
    k = int(np.argmax(g))
    return float(z[k]), float(g[k])
