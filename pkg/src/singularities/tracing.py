"""
Singular Curve Tracing
Created by Sergie Code

Predictor-corrector tracing of {|g| = 1}: a Runge-Kutta step along the
singular direction xi = i conj(g_z/g) followed by Newton projection onto
lambda_hat = 0. The curve parameter realises d/dt = xi.
"""

import logging
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from config import Config
from src.errors import (DegenerateOnCurveError, DomainError, LeftDomainError,
                        NonConvergenceError, TracingError)
from src.surfaces.frame import phi_jet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CurveSample:
    t: float
    z: complex
    xi: complex
    eta: complex


@dataclass
class SingularCurve:
    samples: list = field(default_factory=list)
    closed: bool = False
    period: float = None
    seed: complex = None

    @property
    def points(self):
        return np.array([sample.z for sample in self.samples], dtype=complex)

    @property
    def parameters(self):
        return np.array([sample.t for sample in self.samples])

    def __len__(self):
        return len(self.samples)


@dataclass(frozen=True)
class SpecialPoint:
    """A point where a condition of the criteria vanishes along the curve."""

    z: complex
    condition: str
    touching: bool = False


def _lambda_hat(data, z):
    g = data.g_jet(z, order=1)
    s = g * g.conjugate()
    return s.value.real - 1.0, s.partial(1, 0)


def project_to_singular_set(data, z, tol=None, max_iterations=None):
    """
    Newton projection onto lambda_hat = 0 along its gradient.

    Raises:
        LeftDomainError: if an iterate leaves the domain
        NonConvergenceError: if the gradient is flat or the limit is hit
    """
    tol = Config.PROJECTION_TOLERANCE if tol is None else tol
    max_iterations = Config.NEWTON_MAX_ITERATIONS if max_iterations is None else max_iterations
    z = complex(z)
    for _ in range(max_iterations):
        if not data.domain.contains(z):
            raise LeftDomainError(f"projection left the domain at z={z}")
        lam, lam_z = _lambda_hat(data, z)
        if abs(lam) < tol:
            return _polish(data, z, lam, lam_z)
        gradient = 2.0 * np.conj(lam_z)
        if abs(gradient) < Config.ZERO_TOLERANCE:
            raise NonConvergenceError(f"flat singularity identifier at z={z}")
        z = z - lam * gradient / abs(gradient) ** 2
    raise NonConvergenceError(f"projection did not converge from z={z}")


def _polish(data, z, lam, lam_z):
    """Extra Newton steps past the tolerance; keeps the iterate with the smallest |lambda_hat|."""
    best, best_lam = z, abs(lam)
    for _ in range(Config.NEWTON_POLISH_STEPS):
        gradient = 2.0 * np.conj(lam_z)
        if best_lam == 0.0 or abs(gradient) < Config.ZERO_TOLERANCE:
            break
        z = z - lam * gradient / abs(gradient) ** 2
        if not data.domain.contains(z):
            break
        lam, lam_z = _lambda_hat(data, z)
        if abs(lam) < best_lam:
            best, best_lam = z, abs(lam)
    return best


def singular_field(data, z):
    """xi = i conj(g_z/g) and eta = i/(g omega_hat) at z."""
    pj = data.point_jets(z, order=1)
    g, g_z = pj.g.value, pj.g.partial(1, 0)
    if abs(g_z) < Config.ZERO_TOLERANCE:
        raise DegenerateOnCurveError(f"g_z vanishes on the singular curve at z={z}")
    return 1j * np.conj(g_z / g), 1j / (g * pj.omega.value)


def _rk4(data, z, h, sign):
    def velocity(w):
        return sign * 1j * np.conj(_ratio(data, w))

    k1 = velocity(z)
    k2 = velocity(z + 0.5 * h * k1)
    k3 = velocity(z + 0.5 * h * k2)
    k4 = velocity(z + h * k3)
    return z + h * (k1 + 2 * k2 + 2 * k3 + k4) / 6.0


def _ratio(data, z):
    g = data.g_jet(z, order=1)
    return g.partial(1, 0) / g.value


def _sample(data, t, z):
    xi, eta = singular_field(data, z)
    return CurveSample(float(t), complex(z), complex(xi), complex(eta))


def _march(data, start, step, max_steps, sign):
    """Follow the curve from start in one direction until it closes or ends."""
    samples = [_sample(data, 0.0, start)]
    z, t, farthest = start, 0.0, 0.0
    for _ in range(max_steps):
        speed = abs(samples[-1].xi)
        h = step / speed
        try:
            z_next = project_to_singular_set(data, _rk4(data, z, h, sign))
            sample = _sample(data, t + sign * h, z_next)
        except (LeftDomainError, DomainError):
            logger.debug(f"Curve reached the domain boundary near z={z}")
            return samples, False, None
        z, t = z_next, t + sign * h
        distance = abs(z - start)
        farthest = max(farthest, distance)
        if farthest > 2.0 * step:
            ahead = (np.conj(sign * sample.xi) * (start - z)).real > 0
            if distance < 0.5 * step or (ahead and distance < step):
                # the start closes the loop; this sample is not kept
                offset = distance / abs(sample.xi)
                return samples, True, abs(t) + (offset if ahead else -offset)
        samples.append(sample)
    logger.warning(f"Tracing stopped after {max_steps} steps without closing")
    return samples, False, None


def trace_singular_curve(data, seed, step=None, max_steps=None):
    """
    Trace the singular curve through the projection of seed.

    Args:
        data: surface data of either pipeline
        seed (complex): point near {|g| = 1}
        step (float): arc length per step in the parameter plane
        max_steps (int): step limit per direction

    Returns:
        SingularCurve: samples ordered by t; closed curves end one step
        before returning to the start

    Raises:
        LeftDomainError, NonConvergenceError: if the seed does not project
        DegenerateOnCurveError: if g_z vanishes on the curve
    """
    step = Config.TRACE_STEP if step is None else step
    max_steps = Config.TRACE_MAX_STEPS if max_steps is None else max_steps
    if not data.domain.contains(complex(seed)):
        raise LeftDomainError(f"seed {seed} lies outside the domain")
    start = project_to_singular_set(data, seed)
    logger.info(f"Tracing singular curve from z={start}")

    forward, closed, period = _march(data, start, step, max_steps, 1.0)
    if closed:
        samples = forward
    else:
        backward, _, _ = _march(data, start, step, max_steps, -1.0)
        samples = list(reversed(backward[1:])) + forward
    curve = SingularCurve(samples, closed, period, complex(seed))
    logger.info(f"Traced {len(curve)} samples (closed={closed})")
    return curve


def _condition_functions(data):
    def phi(z):
        return phi_jet(data.point_jets(z, order=2))

    def along(z):
        jet = phi(z)
        xi, _ = singular_field(data, z)
        return xi * jet.partial(1, 0) + np.conj(xi) * jet.partial(0, 1)

    return {
        're_phi': lambda z: phi(z).value.real,
        'im_phi': lambda z: phi(z).value.imag,
    }, {
        're_phi': lambda z: along(z).real,
        'im_phi': lambda z: along(z).imag,
    }


def _root_on_chord(data, func, a, b):
    def on_curve(s):
        return func(project_to_singular_set(data, a + s * (b - a)))

    s = brentq(on_curve, 0.0, 1.0, xtol=1e-15, rtol=4 * np.finfo(float).eps)
    return project_to_singular_set(data, a + s * (b - a))


def find_special_points(data, curve, tol=None):
    """
    Locate the points of a traced curve where Re(phi) or Im(phi) vanish.

    Sign changes between consecutive samples are refined with brentq on the
    projected chord; touching zeros are found as sign changes of the
    derivative along xi whose value stays below tol. Conditions vanishing
    at every sample are skipped.

    Returns:
        list: SpecialPoint entries ordered along the curve
    """
    tol = Config.ZERO_TOLERANCE if tol is None else tol
    values_of, slopes_of = _condition_functions(data)
    points = curve.points
    pairs = list(zip(range(len(points) - 1), range(1, len(points))))
    if curve.closed and len(points) > 2:
        pairs.append((len(points) - 1, 0))

    found = []
    for name, func in values_of.items():
        values = np.array([func(z) for z in points])
        if np.all(np.abs(values) < tol):
            logger.debug(f"{name} vanishes along the whole curve; skipped")
            continue
        slopes = np.array([slopes_of[name](z) for z in points])
        for index in np.flatnonzero(np.abs(values) < tol):
            found.append(SpecialPoint(complex(points[index]), name))
        for i, j in pairs:
            a, b = points[i], points[j]
            if abs(values[i]) < tol or abs(values[j]) < tol:
                continue
            try:
                if values[i] * values[j] < 0:
                    found.append(SpecialPoint(complex(_root_on_chord(data, func, a, b)), name))
                elif slopes[i] * slopes[j] < 0:
                    z = _root_on_chord(data, slopes_of[name], a, b)
                    if abs(func(z)) < tol:
                        found.append(SpecialPoint(complex(z), name, touching=True))
            except (ValueError, TracingError, NonConvergenceError) as exc:
                logger.warning(f"Could not refine {name} root between samples {i} and {j}: {exc}")

    unique = []
    for point in found:
        if all(abs(point.z - other.z) > 1e-8 for other in unique):
            unique.append(point)
    order = {complex(z): k for k, z in enumerate(points)}
    unique.sort(key=lambda sp: order.get(sp.z, int(np.argmin(np.abs(points - sp.z)))))
    logger.info(f"Found {len(unique)} special points")
    return unique
