"""
Discrete harmonic-map oracle.
Created by Sergie Code

Solves g_zzbar = -2 conj(g) g_z g_zbar / (1 - |g|^2) on a small square grid
away from |g| = 1 by red-black over-relaxation, with Dirichlet values taken
from a seed expression. The solution supplies a numerically harmonic g for
checking the closedness gate and path independence of the constant mean
curvature construction. OracleData interpolates the relaxed grid so the
same map can be queried at arbitrary points by the pipeline functions.
"""

import logging

import numpy as np
from scipy.integrate import simpson, trapezoid
from scipy.interpolate import RectBivariateSpline

from src.calculus.wirtinger import Jet
from src.errors import DomainError, InsufficientJetOrderError, NonConvergenceError, NotClosedError
from src.expressions.domain import Rectangle
from src.expressions.evaluator import evaluate
from src.expressions.parser import parse
from src.surfaces.cmc import omega_jet_from_g
from src.surfaces.data import SurfaceData
from src.surfaces.frame import PointJets, tangent_jets

logger = logging.getLogger(__name__)


class DiscreteHarmonicMap:
    """
    Relaxed harmonic map on an n x n grid.

    Args:
        seed (str): expression giving the initial guess and boundary values
        center (complex): grid center
        halfwidth (float): half the side length of the grid
        n (int): nodes per side
        H (float): mean curvature used for the one-form
    """

    def __init__(self, seed='0.1*z + 0.4*zbar', center=0j, halfwidth=0.1, n=41, H=2.0):
        if n < 5:
            raise ValueError("the grid needs at least 5 nodes per side")
        self.center = complex(center)
        self.n = n
        self.H = float(H)
        self.h = 2.0 * halfwidth / (n - 1)
        offsets = np.linspace(-halfwidth, halfwidth, n)
        self.u = self.center.real + offsets
        self.v = self.center.imag + offsets
        self.z = self.u[np.newaxis, :] + 1j * self.v[:, np.newaxis]
        self.g = evaluate(parse(seed) if isinstance(seed, str) else seed, self.z)
        if np.any(np.abs(self.g) >= 1.0):
            raise DomainError("the seed must satisfy |g| < 1 on the whole grid")
        self.iterations = 0

    def _source(self, g):
        h = self.h
        g_u = (g[1:-1, 2:] - g[1:-1, :-2]) / (2 * h)
        g_v = (g[2:, 1:-1] - g[:-2, 1:-1]) / (2 * h)
        g_z, g_zbar = 0.5 * (g_u - 1j * g_v), 0.5 * (g_u + 1j * g_v)
        inner = g[1:-1, 1:-1]
        return -8.0 * np.conj(inner) * g_z * g_zbar / (1.0 - np.abs(inner) ** 2)

    def _neighbours(self, g):
        return g[1:-1, 2:] + g[1:-1, :-2] + g[2:, 1:-1] + g[:-2, 1:-1]

    def solve(self, tol=1e-14, max_iterations=20000, relaxation=None):
        """
        Relax until the largest update falls below tol.

        Returns:
            int: number of sweeps

        Raises:
            NonConvergenceError: if max_iterations sweeps do not suffice
        """
        relaxation = 2.0 / (1.0 + np.sin(np.pi / (self.n - 1))) if relaxation is None else relaxation
        jj, ii = np.meshgrid(np.arange(1, self.n - 1), np.arange(1, self.n - 1), indexing='ij')
        colours = [(jj + ii) % 2 == 0, (jj + ii) % 2 == 1]
        g = self.g.copy()
        for sweep in range(1, max_iterations + 1):
            largest = 0.0
            for colour in colours:
                target = 0.25 * (self._neighbours(g) - self.h ** 2 * self._source(g))
                inner = g[1:-1, 1:-1]
                update = relaxation * (target - inner)
                inner[colour] += update[colour]
                largest = max(largest, float(np.max(np.abs(update[colour]))))
            if largest < tol:
                self.g = g
                self.iterations = sweep
                logger.info(f"Harmonic map relaxed in {sweep} sweeps")
                return sweep
        raise NonConvergenceError(f"relaxation did not converge in {max_iterations} sweeps")

    def residual(self):
        """(Laplacian_h g - source) / 4 on interior nodes; NaN on the boundary."""
        g = self.g
        laplacian = (self._neighbours(g) - 4.0 * g[1:-1, 1:-1]) / self.h ** 2
        out = np.full(g.shape, np.nan, dtype=complex)
        out[1:-1, 1:-1] = 0.25 * (laplacian - self._source(g))
        return out

    def derivatives(self):
        """First Wirtinger derivatives from second-order differences."""
        g_v, g_u = np.gradient(self.g, self.h, edge_order=2)
        return 0.5 * (g_u - 1j * g_v), 0.5 * (g_u + 1j * g_v)

    def g_jets(self):
        """
        Order-2 jets of g at every node.

        g_zzbar is taken from the equation plus the discrete residual, so
        jet-based closedness sees exactly the discrete defect.
        """
        g = self.g
        g_z, g_zbar = self.derivatives()
        g_zv, g_zu = np.gradient(g_z, self.h, edge_order=2)
        g_bv, g_bu = np.gradient(g_zbar, self.h, edge_order=2)
        residual = np.nan_to_num(self.residual())
        g_zzbar = residual - 2.0 * np.conj(g) * g_z * g_zbar / (1.0 - np.abs(g) ** 2)
        partials = {
            (1, 0): g_z,
            (0, 1): g_zbar,
            (2, 0): 0.5 * (g_zu - 1j * g_zv),
            (1, 1): g_zzbar,
            (0, 2): 0.5 * (g_bu + 1j * g_bv),
        }
        return Jet.from_partials(g, partials, order=2)

    def point_jets(self):
        g = self.g_jets()
        return PointJets(g, omega_jet_from_g(g), 1.0 / self.H, 'cmc', self.H)

    def as_data(self):
        """Surface data interpolating the current grid values."""
        return OracleData(self)

    def closedness(self):
        """Largest component of d/dzbar f_z - d/dz f_zbar at every interior node."""
        x = np.stack([component.partial(0, 1) for component in tangent_jets(self.point_jets())])
        magnitude = np.max(np.abs(x - np.conj(x)), axis=0)
        magnitude[0, :] = magnitude[-1, :] = magnitude[:, 0] = magnitude[:, -1] = np.nan
        return magnitude

    def tangent(self):
        """f_z on the grid, shaped (3, n, n)."""
        g = self.g
        g_z, g_zbar = self.derivatives()
        omega = np.conj(g_zbar) / (1.0 - np.abs(g) ** 2) ** 2
        return np.stack([-2.0 * g, 1.0 + g * g, 1j * (1.0 - g * g)]) * omega / self.H

    def _leg(self, f_z, fixed, start, stop, axis):
        step = 1 if stop >= start else -1
        indices = np.arange(start, stop + step, step)
        if len(indices) < 2:
            return np.zeros(3), indices
        if axis == 'u':
            integrand = 2.0 * f_z[:, fixed, indices].real
            coords = self.u[indices]
        else:
            integrand = -2.0 * f_z[:, indices, fixed].imag
            coords = self.v[indices]
        rule = simpson if len(indices) >= 3 else trapezoid
        return np.array([rule(row, x=coords) for row in integrand]), indices

    def integrate_path(self, target, order='uv', tol=1e-6):
        """
        Integrate the one-form from the center node to a node along grid lines.

        Args:
            target (tuple): (row, column) index of an interior node
            order (str): 'uv' moves along u first, 'vu' along v first
            tol (float): closedness tolerance on the visited nodes

        Returns:
            np.ndarray: f(target) - f(center)

        Raises:
            DomainError: if the target is not an interior node
            NotClosedError: if the one-form is not closed along the path
        """
        row, column = target
        if not (0 < row < self.n - 1 and 0 < column < self.n - 1):
            raise DomainError("target must be an interior grid node")
        middle = self.n // 2
        f_z = self.tangent()
        closed = self.closedness()
        if order == 'uv':
            first, visited_u = self._leg(f_z, middle, middle, column, 'u')
            second, visited_v = self._leg(f_z, column, middle, row, 'v')
            nodes = [(middle, i) for i in visited_u] + [(j, column) for j in visited_v]
        elif order == 'vu':
            first, visited_v = self._leg(f_z, middle, middle, row, 'v')
            second, visited_u = self._leg(f_z, row, middle, column, 'u')
            nodes = [(j, middle) for j in visited_v] + [(row, i) for i in visited_u]
        else:
            raise ValueError(f"unknown path order: {order}")
        for node in nodes:
            if closed[node] > tol:
                raise NotClosedError(float(closed[node]), complex(self.z[node]))
        return first + second


class OracleData(SurfaceData):
    """
    Relaxed harmonic map as point-evaluable constant mean curvature data.

    g and its partials up to second order come from interpolating splines
    of the real and imaginary grid values; omega_hat follows the formula.

    Args:
        oracle (DiscreteHarmonicMap): grid map, usually after solve()
    """

    kind = 'cmc'
    max_order = 2

    def __init__(self, oracle):
        self.H = oracle.H
        self.scale = 1.0 / oracle.H
        self.name = 'harmonic_oracle'
        self.domain = Rectangle(oracle.u[0], oracle.u[-1], oracle.v[0], oracle.v[-1])
        degree = min(5, oracle.n - 1)
        # grid rows run over v, the spline's first axis over u
        self._splines = [RectBivariateSpline(oracle.u, oracle.v, part(oracle.g).T, kx=degree, ky=degree)
                         for part in (np.real, np.imag)]

    def _derivative(self, z, du, dv):
        real, imag = (spline.ev(np.real(z), np.imag(z), dx=du, dy=dv) for spline in self._splines)
        return real + 1j * imag

    def g_jet(self, z, order=None):
        order = self.max_order if order is None else order
        if order > self.max_order:
            raise InsufficientJetOrderError(f"interpolated g carries partials up to order {self.max_order}")
        self._check_inside(z)
        partials = {}
        if order >= 1:
            g_u, g_v = self._derivative(z, 1, 0), self._derivative(z, 0, 1)
            partials[(1, 0)] = 0.5 * (g_u - 1j * g_v)
            partials[(0, 1)] = 0.5 * (g_u + 1j * g_v)
        if order >= 2:
            g_uu, g_uv, g_vv = (self._derivative(z, 2, 0), self._derivative(z, 1, 1),
                                self._derivative(z, 0, 2))
            partials[(2, 0)] = 0.25 * (g_uu - 2j * g_uv - g_vv)
            partials[(1, 1)] = 0.25 * (g_uu + g_vv)
            partials[(0, 2)] = 0.25 * (g_uu + 2j * g_uv - g_vv)
        return Jet.from_partials(self._derivative(z, 0, 0), partials, order=order)

    def point_jets(self, z, order=None):
        return super().point_jets(z, self.max_order if order is None else order)

    def omega_jet(self, g_jet, z, order):
        return omega_jet_from_g(g_jet)

    def tangent_order(self):
        return 1
