"""
Adaptive Gauss-Legendre quadrature and line integrals of the surface one-form.
Created by Sergie Code
"""

import logging
from functools import lru_cache

import numpy as np

from config import Config
from src.errors import NonConvergenceError

logger = logging.getLogger(__name__)


@lru_cache(maxsize=8)
def _legendre_rule(nodes):
    return np.polynomial.legendre.leggauss(nodes)


def gauss_legendre(func, a, b, tol=None, max_depth=None, nodes=None):
    """
    Integrate func over [a, b] with adaptive Gauss-Legendre bisection.

    Args:
        func (callable): maps a 1-D array of abscissae to an array whose last
            axis runs over those abscissae
        a (float): lower limit
        b (float): upper limit
        tol (float): accepted difference between a panel and its two halves,
            relative to max(1, |estimate|)
        max_depth (int): bisection depth limit
        nodes (int): points per panel

    Returns:
        np.ndarray | float: the integral, shaped like func's output minus the last axis

    Raises:
        NonConvergenceError: when refinement exceeds max_depth
    """
    tol = Config.QUADRATURE_TOLERANCE if tol is None else tol
    max_depth = Config.QUADRATURE_MAX_DEPTH if max_depth is None else max_depth
    x, w = _legendre_rule(Config.QUADRATURE_NODES if nodes is None else nodes)

    def panel(lo, hi):
        half = 0.5 * (hi - lo)
        values = np.asarray(func(0.5 * (hi + lo) + half * x))
        return half * (values @ w)

    def refine(lo, hi, whole, depth):
        mid = 0.5 * (lo + hi)
        left, right = panel(lo, mid), panel(mid, hi)
        estimate = left + right
        error = np.max(np.abs(estimate - whole))
        if error <= tol * max(1.0, np.max(np.abs(estimate))):
            return estimate
        if depth >= max_depth:
            raise NonConvergenceError(
                f"quadrature on [{lo}, {hi}] did not converge (error {error:.3e})")
        return refine(lo, mid, left, depth + 1) + refine(mid, hi, right, depth + 1)

    if a == b:
        return 0.0 * panel(a, a + 1.0)
    return refine(a, b, panel(a, b), 0)


def line_integral(tangent, waypoints, tol=None):
    """
    Integrate the exact one-form 2 Re(f_z dz) along a polyline.

    Args:
        tangent (callable): maps a complex array to the (3, m) array of f_z
        waypoints (sequence): complex polyline vertices
        tol (float): quadrature tolerance per segment

    Returns:
        np.ndarray: the increment f(end) - f(start)
    """
    total = np.zeros(3)
    points = [complex(p) for p in waypoints]
    for start, end in zip(points[:-1], points[1:]):
        delta = end - start
        if delta == 0:
            continue

        def integrand(s, start=start, delta=delta):
            return 2.0 * (tangent(start + s * delta) * delta).real

        total = total + gauss_legendre(integrand, 0.0, 1.0, tol=tol)
    return total
