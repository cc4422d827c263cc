"""
Maxface Pipeline
Created by Sergie Code

Maximal surfaces with singularities from holomorphic data (g, omega_hat dz):
f = Re(integral of (-2g, 1+g^2, i(1-g^2)) omega_hat dz). Provides the
Gaussian curvatures and the psi function whose derivatives rule out
cuspidal S_k singularities for k >= 2.
"""

import logging
from dataclasses import dataclass

import numpy as np

from config import Config
from src.calculus.quadrature import line_integral
from src.errors import DegenerateError, DivisionByZeroError, NotSingularError, OnSingularSetError
from src.surfaces.frame import normal_dz, normal_from_g, phi_jet, tangent_values

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PsiReport:
    """
    psi = det(gamma_hat', nu, d nu(eta)) at a singular point.

    Attributes:
        psi (float): determinant evaluated from jets
        psi_closed (float): -2 |omega_hat|^2 Im(phi) Re(phi)
        conditions (tuple): Re(phi), Im(r phi_z), Re(r (r phi_z)_z) with r = g / g_z
        a_value (float): 32 |omega_hat|^2 Im(phi)^5 Re(r (r phi_z)_z)
    """

    point: complex
    psi: float
    psi_closed: float
    conditions: tuple
    a_value: float


def integrate(data, path):
    """
    Integrate f along a polyline.

    Args:
        data (HolomorphicData): Weierstrass data
        path (PathSpec | sequence): waypoints from the base point to the target

    Returns:
        np.ndarray: f(end) - f(start)

    Raises:
        DomainError: if a waypoint leaves the domain
        EvaluationError: if the integrand hits a pole
        NonConvergenceError: if the quadrature fails to converge
    """
    if hasattr(path, 'check'):
        path.check(data.domain)
    waypoints = [complex(p) for p in getattr(path, 'waypoints', path)]
    return line_integral(data.tangent, waypoints)


def gaussian_curvature_E(data, z):
    """K_E = -4 |g_z|^2 / (((1+|g|^2)^2 + 4|g|^2)^2 |omega_hat|^2)."""
    pj = data.point_jets(z, order=1)
    omega = pj.omega.value
    if abs(omega) < Config.DIVISION_THRESHOLD:
        raise DivisionByZeroError(f"omega_hat vanishes at z={z}")
    s = abs(pj.g.value) ** 2
    d = (1.0 + s) ** 2 + 4.0 * s
    return -4.0 * abs(pj.g.partial(1, 0)) ** 2 / (d ** 2 * abs(omega) ** 2)


def gaussian_curvature_L(data, z):
    """K_L = |g_z|^2 / ((1-|g|^2)^4 |omega_hat|^2), undefined on the singular set."""
    pj = data.point_jets(z, order=1)
    rho = 1.0 - abs(pj.g.value) ** 2
    if abs(rho) < Config.ON_SET_TOLERANCE:
        raise OnSingularSetError(f"K_L is undefined on the singular set (z={z})")
    omega = pj.omega.value
    if abs(omega) < Config.DIVISION_THRESHOLD:
        raise DivisionByZeroError(f"omega_hat vanishes at z={z}")
    return abs(pj.g.partial(1, 0)) ** 2 / (rho ** 4 * abs(omega) ** 2)


def maxface_conditions(pj):
    """Condition values of the maxface criteria at a point."""
    phi = phi_jet(pj)
    r = pj.g / pj.g.d_z()
    psi1 = r * phi.d_z()
    second = r * psi1.d_z()
    value = phi.value
    return {
        're_phi': value.real,
        'im_phi': value.imag,
        'swallowtail': psi1.value.real,
        'cross_cap': psi1.value.imag,
        'butterfly': second.value.imag,
        's1_minus': second.value.real,
    }


def psi_analysis(data, p):
    """
    Evaluate psi and the quantities of the no-cuspidal-S_k argument.

    Raises:
        NotSingularError: if p is off the singular set
        DegenerateError: if g_z(p) vanishes
    """
    pj = data.point_jets(p)
    g, omega = pj.g.value, pj.omega.value
    g_z = pj.g.partial(1, 0)
    if abs(abs(g) ** 2 - 1.0) >= Config.ON_SET_TOLERANCE:
        raise NotSingularError(f"p={p} is not on the singular set")
    if abs(g_z) < Config.ZERO_TOLERANCE:
        raise DegenerateError(f"g_z vanishes at p={p}")

    xi = 1j * np.conj(g_z / g)
    eta = 1j / (g * omega)
    xi_f = 2.0 * (xi * tangent_values(pj)).real
    d_nu = 2.0 * (eta * normal_dz(pj.g)).real
    psi = float(np.linalg.det(np.array([xi_f, normal_from_g(g), d_nu])))

    conditions = maxface_conditions(pj)
    im_phi, re_phi = conditions['im_phi'], conditions['re_phi']
    report = PsiReport(
        point=complex(p),
        psi=psi,
        psi_closed=-2.0 * abs(omega) ** 2 * im_phi * re_phi,
        conditions=(re_phi, conditions['cross_cap'], conditions['s1_minus']),
        a_value=32.0 * abs(omega) ** 2 * im_phi ** 5 * conditions['s1_minus'],
    )
    logger.debug(f"psi analysis at p={p}: psi={psi:.6g}, a={report.a_value:.6g}")
    return report
