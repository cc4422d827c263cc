"""
Fold symmetry test.
Created by Sergie Code

A first-kind singular point is a fold singular point when some chart has
f(u, v) = f(u, -v). The chart built here moves a parameter u along the
singular curve and then v along the null field eta = i/(g omega_hat).
"""

import logging
from dataclasses import dataclass

import numpy as np

from config import Config
from src.calculus.quadrature import line_integral
from src.errors import ChartFailureError
from src.singularities.tracing import project_to_singular_set

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FoldVerdict:
    """
    Outcome of the symmetry test.

    An asymmetric verdict only means that the tested chart has no
    symmetry; it does not rule out a fold.
    """

    symmetric: bool
    deviation: float
    witness: tuple = None

    @property
    def label(self):
        return 'Symmetric' if self.symmetric else 'Asymmetric'

    def to_dict(self):
        return {'verdict': self.label, 'deviation': self.deviation,
                'witness': list(self.witness) if self.witness is not None else None}


def _grid(halfwidth, grid):
    if grid % 2 == 0:
        grid += 1
    return np.linspace(-halfwidth, halfwidth, grid)


def fold_symmetry_test(F, p=(0.0, 0.0), halfwidth=None, tol=None, grid=None):
    """
    Compare F(u, v) with F(u, -v) on a grid around p.

    Args:
        F (callable): F(u, v) -> 3-vector, or an object with evaluate_grid
        p (tuple): chart coordinates of the tested point
        halfwidth (float): half side of the tested square
        tol (float): largest accepted deviation
        grid (int): nodes per side, made odd so v = 0 is a node

    Returns:
        FoldVerdict: symmetric verdict with the worst deviation and its witness
    """
    halfwidth = Config.FOLD_HALFWIDTH if halfwidth is None else halfwidth
    tol = Config.FOLD_TOLERANCE if tol is None else tol
    grid = Config.FOLD_GRID if grid is None else grid
    offsets = _grid(halfwidth, grid)
    u0, v0 = p
    us, vs = u0 + offsets, v0 + offsets
    if hasattr(F, 'evaluate_grid'):
        values = F.evaluate_grid(us, vs)
    else:
        values = np.array([[np.asarray(F(u, v), dtype=float) for v in vs] for u in us])
    mirrored = values[:, ::-1]
    gaps = np.linalg.norm(values - mirrored, axis=-1)
    i, j = np.unravel_index(int(np.argmax(gaps)), gaps.shape)
    deviation = float(gaps[i, j])
    witness = (float(offsets[i]), float(offsets[j])) if deviation > 0 else None
    verdict = FoldVerdict(deviation < tol, deviation, witness)
    logger.debug(f"Fold symmetry test: {verdict.label} (deviation {deviation:.3e})")
    return verdict


class AdaptedChart:
    """
    Chart (u, v) around a first-kind singular point p.

    u flows along xi with projection back onto the singular set, v then
    flows along eta; values are f relative to f(p), accumulated over the
    chords of the flow.

    Raises:
        ChartFailureError: if xi and eta are dependent at p or g, omega_hat vanish
    """

    def __init__(self, data, p, substeps=None, tol=None):
        self.data = data
        self.p = project_to_singular_set(data, p)
        self.substeps = Config.FOLD_SUBSTEPS if substeps is None else substeps
        tol = Config.ZERO_TOLERANCE if tol is None else tol
        xi, eta = self._directions(self.p)
        if abs((np.conj(xi) * eta).imag) < tol:
            raise ChartFailureError(f"xi and eta are dependent at p={self.p}")

    def _directions(self, z):
        pj = self.data.point_jets(z, order=1)
        g, omega = pj.g.value, pj.omega.value
        if abs(g) < Config.ZERO_TOLERANCE or abs(omega) < Config.ZERO_TOLERANCE:
            raise ChartFailureError(f"g or omega_hat vanishes at z={z}")
        return 1j * np.conj(pj.g.partial(1, 0) / g), 1j / (g * omega)

    def _rk4(self, z, h, which):
        def velocity(w):
            return self._directions(w)[which]

        k1 = velocity(z)
        k2 = velocity(z + 0.5 * h * k1)
        k3 = velocity(z + 0.5 * h * k2)
        k4 = velocity(z + h * k3)
        return z + h * (k1 + 2 * k2 + 2 * k3 + k4) / 6.0

    def _walk(self, z, value, targets, which, spacing):
        """Flow to each of the sorted non-negative or non-positive targets."""
        results, position = [], 0.0
        for target in targets:
            count = max(1, int(np.ceil(abs(target - position) / spacing * self.substeps - 1e-9)))
            h = (target - position) / count
            for _ in range(count):
                z_next = self._rk4(z, h, which)
                if which == 0:
                    z_next = project_to_singular_set(self.data, z_next)
                value = value + line_integral(self.data.tangent, [z, z_next])
                z = z_next
            position = target
            results.append((z, value))
        return results

    def _line(self, z, value, params, which):
        params = np.asarray(params, dtype=float)
        spacing = max(float(np.max(np.abs(params))), 1e-12) / max(len(params) // 2, 1)
        out = [None] * len(params)
        for sign in (1.0, -1.0):
            chosen = [k for k, s in enumerate(params) if s * sign > 0]
            chosen.sort(key=lambda k: abs(params[k]))
            walked = self._walk(z, value, [params[k] for k in chosen], which, spacing)
            for k, result in zip(chosen, walked):
                out[k] = result
        for k, s in enumerate(params):
            if s == 0:
                out[k] = (z, value)
        return out

    def evaluate_grid(self, us, vs):
        """Chart values on the tensor grid us x vs, shaped (len(us), len(vs), 3)."""
        values = np.empty((len(us), len(vs), 3))
        for i, (z_u, f_u) in enumerate(self._line(self.p, np.zeros(3), us, 0)):
            for j, (_, f_uv) in enumerate(self._line(z_u, f_u, vs, 1)):
                values[i, j] = f_uv
        return values

    def __call__(self, u, v):
        return self.evaluate_grid([u], [v])[0, 0]


def surface_fold_test(data, p, halfwidth=None, tol=None, grid=None):
    """Run the symmetry test in the adapted chart at p."""
    chart = AdaptedChart(data, p)
    verdict = fold_symmetry_test(chart, (0.0, 0.0), halfwidth, tol, grid)
    logger.info(f"Surface fold test at p={chart.p}: {verdict.label}")
    return verdict
