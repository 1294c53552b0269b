"""Seeded samplers shared by property and acceptance tests."""

import math

import numpy as np

from poincare import PolarQuadratic, optimal_degree

THETA_LO = 0.01
THETA_HI = math.pi - 0.01


def random_quadratics(n, seed, r_range=(0.1, 10.0), theta_range=(THETA_LO, THETA_HI), max_s=None):
    """``n`` PolarQuadratics with uniform r and theta; rejects optimal degree > max_s."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n:
        r = rng.uniform(*r_range)
        th = rng.uniform(*theta_range)
        if max_s is not None and optimal_degree(th) > max_s:
            continue
        out.append(PolarQuadratic(float(r), float(th)))
    return out
