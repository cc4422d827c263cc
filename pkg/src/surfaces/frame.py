"""
Surface Frame
Created by Sergie Code

First derivatives of f, the unit normal, area densities and the singular
and null directions shared by the maxface and constant mean curvature
pipelines. Both pipelines write f_z = scale * (-2g, 1+g^2, i(1-g^2)) * omega
with scale 1/2 for maxfaces and 1/H for constant mean curvature surfaces.
"""

import logging
from dataclasses import dataclass

import numpy as np

from config import Config
from src.calculus.wirtinger import elementary
from src.errors import OnSingularSetError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PointJets:
    """Jets of g and omega_hat at a point, with the pipeline's scale."""

    g: object
    omega: object
    scale: float
    kind: str
    H: float = None


@dataclass(frozen=True)
class FrameSample:
    z: complex
    f_z: np.ndarray
    f_zbar: np.ndarray
    normal: np.ndarray
    lam: float
    lam_hat: float
    phi: complex
    xi: complex
    eta: complex


def tangent_jets(pj):
    """Jets of the three components of f_z."""
    g, omega = pj.g, pj.omega
    g2 = g * g
    return (g * omega * (-2.0 * pj.scale),
            (g2 + 1.0) * omega * pj.scale,
            (1.0 - g2) * omega * (1j * pj.scale))


def tangent_values(pj):
    """Values of f_z, shaped (3, *point_shape)."""
    g, omega = pj.g.value, pj.omega.value
    g2 = g * g
    parts = np.broadcast_arrays(-2.0 * g * omega, (1.0 + g2) * omega, 1j * (1.0 - g2) * omega)
    return pj.scale * np.stack(parts)


def normal_from_g(g):
    """Unit normal (1+|g|^2, 2Re g, 2Im g) / sqrt((1+|g|^2)^2 + 4|g|^2)."""
    g = np.asarray(g)
    s = np.abs(g) ** 2
    root = np.sqrt((1.0 + s) ** 2 + 4.0 * s)
    return np.stack([1.0 + s, 2.0 * g.real, 2.0 * g.imag]) / root


def normal_jets(g):
    gbar = g.conjugate()
    s = g * gbar
    numerator = (s + 1.0, g + gbar, (g - gbar) * -1j)
    root = elementary('sqrt', (s + 1.0) * (s + 1.0) + s * 4.0)
    return tuple(component / root for component in numerator)


def normal_dz(g_jet):
    """
    Closed form of d(normal)/dz from the first jet of g.

    With s = |g|^2 and D = (1+s)^2 + 4s,
    nu_z = (dN + rho_hat * s_z * N) / sqrt(D), rho_hat = -(3+s)/D.
    """
    g = g_jet.value
    g_z = g_jet.partial(1, 0)
    gbar_z = np.conj(g_jet.partial(0, 1))
    s = abs(g) ** 2
    d = (1.0 + s) ** 2 + 4.0 * s
    rho_hat = -(3.0 + s) / d
    n = np.array([1.0 + s, g + np.conj(g), -1j * (g - np.conj(g))])
    dn = g_z * np.array([np.conj(g), 1.0, -1j]) + gbar_z * np.array([g, 1.0, 1j])
    s_z = g_z * np.conj(g) + g * gbar_z
    return (dn + rho_hat * s_z * n) / np.sqrt(d)


def wirtinger_det(w_z, normal):
    """det(W_u, W_v, normal) of a real field W given W_z, using W_u = 2Re W_z, W_v = -2Im W_z."""
    return float(-4.0 * np.dot(np.cross(w_z.real, w_z.imag), normal))


def phi_jet(pj):
    """Jet of phi = g_z / (g^2 omega_hat)."""
    return pj.g.d_z() / (pj.g * pj.g * pj.omega)


def singular_direction(g, g_z):
    """xi = i conj(g_z / g) as a complex number."""
    return 1j * np.conj(g_z / g)


def null_direction(g, omega):
    """eta = i / (g omega_hat) as a complex number."""
    return 1j / (g * omega)


def signed_area_density(pj):
    """Closed form lambda = 4 scale^2 (|g|^2-1) |omega|^2 sqrt((1+|g|^2)^2 + 4|g|^2)."""
    s = abs(pj.g.value) ** 2
    return 4.0 * pj.scale ** 2 * (s - 1.0) * abs(pj.omega.value) ** 2 * np.sqrt((1.0 + s) ** 2 + 4.0 * s)


def frame_from_jets(pj, z):
    g = pj.g.value
    g_z = pj.g.partial(1, 0)
    omega = pj.omega.value
    f_z = tangent_values(pj)
    normal = normal_from_g(g)
    phi = xi = eta = None
    if abs(g) > Config.DIVISION_THRESHOLD:
        xi = complex(singular_direction(g, g_z))
        if abs(omega) > Config.DIVISION_THRESHOLD:
            phi = complex(g_z / (g * g * omega))
            eta = complex(null_direction(g, omega))
    return FrameSample(
        z=complex(z),
        f_z=f_z,
        f_zbar=np.conj(f_z),
        normal=normal,
        lam=wirtinger_det(f_z, normal),
        lam_hat=abs(g) ** 2 - 1.0,
        phi=phi,
        xi=xi,
        eta=eta,
    )


def frame(data, z):
    """
    Evaluate the frame of a surface at z.

    Args:
        data: HolomorphicData, HarmonicData or JetData
        z (complex): point of the domain

    Returns:
        FrameSample: xi, eta and phi are None where g or omega_hat vanish
    """
    return frame_from_jets(data.point_jets(z, order=1), z)


def identifier_gradient(data, z):
    """Real gradient (d/du, d/dv) of lambda_hat = |g|^2 - 1."""
    g = data.g_jet(z, order=1)
    lam_z = (g * g.conjugate()).partial(1, 0)
    return 2.0 * lam_z.real, -2.0 * lam_z.imag


def gauss_map_area_density(data, z):
    """det(nu_u, nu_v, nu), vanishing where the Gauss map is singular."""
    pj = data.point_jets(z, order=1)
    nu = normal_jets(pj.g)
    nu_z = np.array([component.partial(1, 0) for component in nu])
    return wirtinger_det(nu_z, normal_from_g(pj.g.value))


def gaussian_curvature_from_jets(data, z):
    """K_E = det(nu_u, nu_v, nu) / det(f_u, f_v, nu), from jets of the normal."""
    pj = data.point_jets(z, order=1)
    if abs(abs(pj.g.value) ** 2 - 1.0) < Config.ON_SET_TOLERANCE:
        raise OnSingularSetError(f"area density vanishes at z={z}")
    normal = normal_from_g(pj.g.value)
    nu_z = np.array([component.partial(1, 0) for component in normal_jets(pj.g)])
    return wirtinger_det(nu_z, normal) / wirtinger_det(tangent_values(pj), normal)
