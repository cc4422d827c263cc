"""
Curvature invariants along singular curves.
Created by Sergie Code

kappa_s = eps det(xi f, xi xi f, nu) / |xi f|^3 and
kappa_nu = <xi xi f, nu> / |xi f|^2 with xi = i conj(g_z/g), evaluated from
Wirtinger jets or by finite differences along xi, next to the closed forms
and the curvature of the singular locus f(gamma).
"""

import logging
from dataclasses import dataclass

import numpy as np

from config import Config
from src.calculus.quadrature import line_integral
from src.errors import NotFirstKindError, NotSingularError, SurfLabError, TooFewSamplesError
from src.singularities.classify import classify
from src.surfaces.frame import normal_from_g, tangent_jets, tangent_values

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InvariantSample:
    point: complex
    kappa_s: float
    kappa_nu: float
    epsilon_gamma: int
    determinant: float
    xi_f_norm: float
    xi_f: np.ndarray
    xixi_f: np.ndarray
    method: str = 'jets'


def _first_kind_jets(data, p, order, tol):
    tol = Config.ZERO_TOLERANCE if tol is None else tol
    pj = data.point_jets(p, order=order)
    g, omega = pj.g.value, pj.omega.value
    if abs(abs(g) ** 2 - 1.0) >= Config.ON_SET_TOLERANCE:
        raise NotSingularError(f"p={p} is not on the singular set")
    phi = pj.g.partial(1, 0) / (g * g * omega)
    if abs(phi.imag) < tol:
        raise NotFirstKindError(f"p={p} is not of the first kind (Im phi = {phi.imag:.3e})")
    return pj, phi


def kappa_s_closed(data, p, tol=None):
    """
    Closed-form singular curvature -|g_z|^2 / (8 scale |Im phi| |omega_hat|^2).

    scale = 1/2 gives the maxface form -|g_z|^2 / (4 |Im phi| |omega_hat|^2),
    scale = 1/H the constant mean curvature form.
    """
    pj, phi = _first_kind_jets(data, p, 1, tol)
    g_z = pj.g.partial(1, 0)
    return -abs(g_z) ** 2 / (8.0 * pj.scale * abs(phi.imag) * abs(pj.omega.value) ** 2)


def _epsilon(pj, xi):
    g, omega = pj.g.value, pj.omega.value
    eta = 1j / (g * omega)
    lam_z = (pj.g * pj.g.conjugate()).partial(1, 0)
    orientation = (np.conj(xi) * eta).imag
    eta_lambda = 2.0 * (eta * lam_z).real
    return 1 if orientation * eta_lambda > 0 else -1


def _xi_f_field(data, z):
    pj = data.point_jets(z, order=1)
    xi = 1j * np.conj(pj.g.partial(1, 0) / pj.g.value)
    return 2.0 * (xi * tangent_values(pj)).real


def _finite_difference(data, p, xi, h):
    def at(s):
        return _xi_f_field(data, p + s * xi)

    return (8.0 * (at(h) - at(-h)) - (at(2 * h) - at(-2 * h))) / (12.0 * h)


def kappa_general(data, p, method='jets', tol=None, step=None):
    """
    Singular and limiting normal curvature at a first-kind point.

    Args:
        data: surface data of either pipeline
        p (complex): first-kind singular point
        method (str): 'jets' for exact derivatives, 'fd' for the
            finite-difference fallback along xi
        tol (float): first-kind zero test
        step (float): curve step the fd increment is derived from

    Returns:
        InvariantSample: kappa_s, kappa_nu and the intermediates

    Raises:
        NotFirstKindError: if |Im phi| < tol at p
    """
    pj, _ = _first_kind_jets(data, p, None, tol)
    g = pj.g.value
    ratio = pj.g.d_z() / pj.g
    xi_jet = ratio.conjugate() * 1j
    xi = xi_jet.value
    normal = normal_from_g(g)

    if method == 'jets':
        components = []
        for f_z in tangent_jets(pj):
            product = xi_jet * f_z
            components.append(product + product.conjugate())
        xi_f = np.array([w.value.real for w in components])
        xixi_f = np.array([2.0 * (xi * w.partial(1, 0)).real for w in components])
    elif method == 'fd':
        step = Config.TRACE_STEP if step is None else step
        h = Config.FD_RELATIVE_STEP * step
        xi_f = _xi_f_field(data, p)
        coarse = _finite_difference(data, p, xi, h)
        fine = _finite_difference(data, p, xi, h / 2)
        xixi_f = (16.0 * fine - coarse) / 15.0
    else:
        raise ValueError(f"unknown method: {method}")

    norm = float(np.linalg.norm(xi_f))
    determinant = float(np.linalg.det(np.array([xi_f, xixi_f, normal])))
    epsilon = _epsilon(pj, xi)
    return InvariantSample(
        point=complex(p),
        kappa_s=epsilon * determinant / norm ** 3,
        kappa_nu=float(np.dot(xixi_f, normal)) / norm ** 2,
        epsilon_gamma=epsilon,
        determinant=determinant,
        xi_f_norm=norm,
        xi_f=xi_f,
        xixi_f=xixi_f,
        method=method,
    )


def locus_positions(data, curve):
    """f along the curve relative to its first sample, by chord integrals."""
    points = curve.points
    positions = np.zeros((len(points), 3))
    for k in range(1, len(points)):
        positions[k] = positions[k - 1] + line_integral(data.tangent, [points[k - 1], points[k]])
    return positions


def locus_curvature(curve, data):
    """
    Curvature of the singular locus f(gamma) at every sample.

    A quartic is fitted through five consecutive samples around each one,
    wrapping around closed curves and clamping at the ends of open ones.

    Raises:
        TooFewSamplesError: with fewer than five samples
    """
    n = len(curve)
    if n < 5:
        raise TooFewSamplesError(f"locus curvature needs at least 5 samples, got {n}")
    positions = locus_positions(data, curve)
    t = curve.parameters
    curvature = np.empty(n)
    for k in range(n):
        if curve.closed:
            offsets = np.arange(k - 2, k + 3)
            indices = offsets % n
            times = t[indices] + curve.period * np.floor_divide(offsets, n)
        else:
            start = min(max(k - 2, 0), n - 5)
            indices = np.arange(start, start + 5)
            times = t[indices]
        scale = np.max(np.abs(times - t[k]))
        coeffs = np.polyfit((times - t[k]) / scale, positions[indices], 4)
        first = coeffs[3] / scale
        second = 2.0 * coeffs[2] / scale ** 2
        curvature[k] = np.linalg.norm(np.cross(first, second)) / np.linalg.norm(first) ** 3
    return curvature


def annotate_curve(data, curve, method='jets'):
    """
    Invariant table of a traced curve.

    Returns:
        list: one dict per sample with t, z, kappa_s_closed, kappa_s_general,
        kappa_nu, kappa_locus, type and epsilon_gamma; NaN where a value
        does not apply
    """
    try:
        locus = locus_curvature(curve, data)
    except TooFewSamplesError as exc:
        logger.warning(f"{exc}")
        locus = np.full(len(curve), np.nan)
    rows = []
    for sample, kappa in zip(curve.samples, locus):
        row = {'t': sample.t, 'z': sample.z, 'kappa_s_closed': np.nan,
               'kappa_s_general': np.nan, 'kappa_nu': np.nan, 'kappa_locus': float(kappa),
               'type': classify(data, sample.z).type.value, 'epsilon_gamma': np.nan}
        try:
            invariant = kappa_general(data, sample.z, method=method)
            row.update(kappa_s_closed=kappa_s_closed(data, sample.z),
                       kappa_s_general=invariant.kappa_s,
                       kappa_nu=invariant.kappa_nu,
                       epsilon_gamma=invariant.epsilon_gamma)
        except NotFirstKindError:
            logger.debug(f"Second-kind sample at z={sample.z}")
        except SurfLabError as exc:
            logger.warning(f"Invariants failed at z={sample.z}: {exc}")
        rows.append(row)
    logger.info(f"Annotated {len(rows)} curve samples")
    return rows
