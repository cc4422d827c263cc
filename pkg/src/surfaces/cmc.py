"""
Constant Mean Curvature Pipeline
Created by Sergie Code

Surfaces built from an extended harmonic map g and a nonzero constant H:
omega_hat = conj(g)_z / (1 - |g|^2)^2, f_z = (1/H)(-2g, 1+g^2, i(1-g^2)) omega_hat.
Integration is refused unless the one-form 2Re(f_z dz) is closed along the
requested path.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from config import Config
from src.calculus.quadrature import line_integral
from src.calculus.tolerance import ZeroState, zero_state
from src.calculus.wirtinger import Jet
from src.errors import (DegenerateError, DivisionByZeroError, NotClosedError,
                        OnSingularSetError)
from src.expressions.evaluator import eval_jet
from src.surfaces.frame import phi_jet, tangent_jets

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HarmonicityReport:
    residual: complex
    omega_value: complex
    omega_nonzero: bool
    g2omega_nonzero: bool

    @property
    def harmonic(self):
        return abs(self.residual) < Config.ON_SET_TOLERANCE


@dataclass(frozen=True)
class ClosednessReport:
    """Residual vector at z; z may be an array, with residual shaped (3, *z.shape)."""

    z: object
    residual: np.ndarray

    @property
    def magnitudes(self):
        return np.max(np.abs(self.residual), axis=0)

    @property
    def magnitude(self):
        return float(np.max(np.abs(self.residual)))


@dataclass
class ButterflyReport:
    point: complex
    conditions: dict = field(default_factory=dict)
    verdict: bool = False


def _check_off_set(g_value, tol=None):
    tol = Config.ON_SET_TOLERANCE if tol is None else tol
    rho = 1.0 - np.abs(g_value) ** 2
    if np.any(np.abs(rho) < tol):
        raise OnSingularSetError("1 - |g|^2 vanishes; omega_hat is undefined there")


def omega_jet_from_g(g_jet, tol=None):
    """
    Jet of omega_hat = conj(g)_z / (1 - |g|^2)^2, one order below g.

    Raises:
        OnSingularSetError: when |g| = 1 at any of the points
    """
    _check_off_set(g_jet.value, tol)
    gbar = g_jet.conjugate()
    rho = 1.0 - g_jet * gbar
    return gbar.d_z() / (rho * rho)


def omega_from_g(g_jet, tol=None):
    """Value of the omega_hat formula at the jet's point."""
    return omega_jet_from_g(g_jet, tol).value


def residual_from_jets(g_jet, omega):
    """g_zzbar + 2(1 - |g|^2) conj(g) g_z conj(omega_hat)."""
    g = g_jet.value
    return (g_jet.partial(1, 1)
            + 2.0 * (1.0 - abs(g) ** 2) * np.conj(g) * g_jet.partial(1, 0) * np.conj(omega))


def harmonicity_residual(g, omega=None, z=0j, tol=None):
    """
    Evaluate the extended harmonic map equation at z.

    Args:
        g: expression tree or order >= 2 Jet of g
        omega: None for the formula, an expression tree or a Jet
        z (complex): evaluation point
        tol (float): zero threshold of the nondegeneracy flags

    Returns:
        HarmonicityReport: residual and the omega_hat conditions
    """
    tol = Config.ZERO_TOLERANCE if tol is None else tol
    g_jet = g if isinstance(g, Jet) else eval_jet(g, z, 2)
    if omega is None:
        omega_value = omega_from_g(g_jet)
    elif isinstance(omega, Jet):
        omega_value = omega.value
    else:
        omega_value = eval_jet(omega, z, 0).value
    residual = complex(residual_from_jets(g_jet, omega_value))
    return HarmonicityReport(
        residual=residual,
        omega_value=complex(omega_value),
        omega_nonzero=abs(omega_value) > tol,
        g2omega_nonzero=abs(g_jet.value ** 2 * omega_value) > tol,
    )


def closedness_residual(data, z):
    """d/dzbar f_z - d/dz f_zbar, which is 2i Im(d/dzbar f_z)."""
    z = complex(z) if np.ndim(z) == 0 else np.asarray(z, dtype=complex)
    pj = data.point_jets(z, order=2)
    x = np.array([np.broadcast_to(component.partial(0, 1), np.shape(z))
                  for component in tangent_jets(pj)])
    return ClosednessReport(z, x - np.conj(x))


def check_closed(data, waypoints, tol=None, samples=None):
    """
    Sample the closedness residual along a polyline.

    Raises:
        NotClosedError: with the worst residual and its location
    """
    samples = Config.CLOSEDNESS_SAMPLES if samples is None else samples
    s = np.linspace(0.0, 1.0, samples)
    points = np.concatenate([start + s * (end - start)
                             for start, end in zip(waypoints[:-1], waypoints[1:])])
    return check_closed_at(data, points, tol)


def check_closed_at(data, points, tol=None):
    """Closedness gate over an array of points; returns the worst residual."""
    tol = Config.CLOSEDNESS_TOLERANCE if tol is None else tol
    points = np.asarray(points, dtype=complex).ravel()
    if points.size == 0:
        return 0.0
    magnitudes = closedness_residual(data, points).magnitudes
    index = int(np.argmax(magnitudes))
    worst, location = float(magnitudes[index]), complex(points[index])
    if worst > tol:
        logger.error(f"One-form not closed: residual {worst:.3e} at z={location}")
        raise NotClosedError(worst, location)
    return worst


def integrate_cmc(data, path, tol=None):
    """
    Integrate f from the first to the last waypoint of a path.

    Args:
        data (HarmonicData): extended harmonic map and H
        path (PathSpec | sequence): polyline waypoints inside the domain
        tol (float): closedness tolerance

    Returns:
        np.ndarray: f(end) - f(start)
    """
    waypoints = [complex(p) for p in getattr(path, 'waypoints', path)]
    if hasattr(path, 'check'):
        path.check(data.domain)
    if len(waypoints) < 2 or all(p == waypoints[0] for p in waypoints):
        return np.zeros(3)
    check_closed(data, waypoints, tol)
    return line_integral(data.tangent, waypoints)


def gaussian_curvature_E_cmc(data, z):
    """
    Euclidean Gaussian curvature of either pipeline.

    (|g_zbar|^2 - |g_z|^2) / (scale^2 D^2 |omega_hat|^2) with
    D = (1+|g|^2)^2 + 4|g|^2; scale = 1/H gives H^2 in the numerator.
    """
    pj = data.point_jets(z, order=1)
    omega = pj.omega.value
    if abs(omega) < Config.DIVISION_THRESHOLD:
        raise DivisionByZeroError(f"omega_hat vanishes at z={z}")
    s = abs(pj.g.value) ** 2
    d = (1.0 + s) ** 2 + 4.0 * s
    numerator = abs(pj.g.partial(0, 1)) ** 2 - abs(pj.g.partial(1, 0)) ** 2
    return numerator / (pj.scale ** 2 * d ** 2 * abs(omega) ** 2)


def gaussian_curvature_L_cmc(data, z):
    """Lorentzian curvature H^2 (|g_z / g_zbar|^2 - 1) at a regular point."""
    g = data.g_jet(z, order=1)
    if abs(abs(g.value) ** 2 - 1.0) < Config.ON_SET_TOLERANCE:
        raise OnSingularSetError(f"K_L is undefined on the singular set (z={z})")
    g_zbar = g.partial(0, 1)
    if abs(g_zbar) < Config.DIVISION_THRESHOLD:
        raise DivisionByZeroError(f"g_zbar vanishes at z={z}")
    return data.H ** 2 * (abs(g.partial(1, 0) / g_zbar) ** 2 - 1.0)


def xi_f_closed(pj):
    """xi f at a singular point: 4 scale |omega_hat|^2 Im(phi) (-1, Re g, Im g)."""
    g, omega = pj.g.value, pj.omega.value
    phi = pj.g.partial(1, 0) / (g * g * omega)
    return 4.0 * pj.scale * abs(omega) ** 2 * phi.imag * np.array([-1.0, g.real, g.imag])


def cmc_conditions(pj):
    """
    Condition values of the constant mean curvature criteria.

    Every entry carries the zbar-derivative terms, which vanish identically
    for holomorphic data.
    """
    phi = phi_jet(pj)
    g_z = pj.g.d_z()
    r = pj.g / g_z
    r_bar = r.conjugate()
    psi1 = r * phi.d_z()
    zbar_psi1 = r_bar * phi.d_zbar()
    second = r * psi1.d_z()
    zbar_second = r_bar * zbar_psi1.d_zbar()
    mixed = phi.partial(1, 1) / abs(g_z.value) ** 2
    value = phi.value
    return {
        're_phi': value.real,
        'im_phi': value.imag,
        'swallowtail': psi1.value.real - zbar_psi1.value.real,
        'cross_cap': psi1.value.imag - zbar_psi1.value.imag,
        'butterfly': second.value.imag + zbar_second.value.imag - mixed.imag,
        'zbar_terms': max(abs(zbar_psi1.value.real), abs(zbar_psi1.value.imag),
                          abs(zbar_second.value.imag), abs(mixed.imag)),
    }


def butterfly_test_cmc(data, p, tol=None):
    """
    Cuspidal butterfly criterion for constant mean curvature data.

    A front point (Re phi != 0) with Im phi = 0, vanishing swallowtail
    condition and nonzero butterfly condition.

    Raises:
        DegenerateError: if g_z(p) vanishes
    """
    pj = data.point_jets(p)
    if abs(pj.g.partial(1, 0)) < (Config.ZERO_TOLERANCE if tol is None else tol):
        raise DegenerateError(f"g_z vanishes at p={p}")
    conditions = cmc_conditions(pj)
    verdict = (zero_state(conditions['re_phi'], tol) is ZeroState.NONZERO
               and zero_state(conditions['im_phi'], tol) is ZeroState.ZERO
               and zero_state(conditions['swallowtail'], tol) is ZeroState.ZERO
               and zero_state(conditions['butterfly'], tol) is ZeroState.NONZERO)
    logger.debug(f"Butterfly test at p={p}: {verdict}")
    return ButterflyReport(complex(p), conditions, verdict)
