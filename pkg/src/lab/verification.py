"""
Property checks run by the verify command.
Created by Sergie Code

Each check returns a CheckResult with the worst magnitude it saw and where;
a failing check names the property, the location and the magnitude.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from src.errors import NotFirstKindError, SurfLabError
from src.singularities.classify import classify, gauss_map_fold
from src.singularities.invariants import kappa_general, kappa_s_closed
from src.surfaces.cmc import gaussian_curvature_E_cmc, integrate_cmc
from src.surfaces.maxface import integrate, psi_analysis

logger = logging.getLogger(__name__)


@dataclass
class CheckResult:
    name: str
    passed: bool
    magnitude: float = 0.0
    location: complex = None
    tolerance: float = None
    samples: int = 0
    detail: str = ''

    def to_dict(self):
        location = None if self.location is None else [self.location.real, self.location.imag]
        return {'name': self.name, 'passed': self.passed, 'magnitude': self.magnitude,
                'location': location, 'tolerance': self.tolerance, 'samples': self.samples,
                'detail': self.detail}


@dataclass
class VerificationReport:
    name: str
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

    def to_dict(self):
        return {'surface': self.name, 'passed': self.passed,
                'checks': [check.to_dict() for check in self.checks]}


class _Worst:
    """Track the largest violation of a tolerance."""

    def __init__(self, name, tolerance):
        self.name = name
        self.tolerance = tolerance
        self.magnitude = 0.0
        self.location = None
        self.samples = 0
        self.failed = False

    def record(self, magnitude, location, limit=None):
        limit = self.tolerance if limit is None else limit
        self.samples += 1
        if magnitude > self.magnitude or self.location is None:
            self.magnitude, self.location = float(magnitude), complex(location)
        if not magnitude <= limit:
            self.failed = True

    def result(self, detail=''):
        return CheckResult(self.name, not self.failed, self.magnitude, self.location,
                           self.tolerance, self.samples, detail)


def _random_inside(domain, rng, count):
    u_min, u_max, v_min, v_max = domain.bounds()
    points = []
    while len(points) < count:
        z = complex(rng.uniform(u_min, u_max), rng.uniform(v_min, v_max))
        if domain.contains(z):
            points.append(z)
    return points


def check_path_independence(data, base_point, targets=20, seed=0, tolerance=None):
    """Compare a straight path with a path through a random waypoint."""
    tolerance = (1e-9 if data.kind == 'maxface' else 1e-6) if tolerance is None else tolerance
    integrator = integrate if data.kind == 'maxface' else integrate_cmc
    rng = np.random.default_rng(seed)
    worst = _Worst('path_independence', tolerance)
    ends = _random_inside(data.domain, rng, targets)
    middles = _random_inside(data.domain, rng, targets)
    for end, middle in zip(ends, middles):
        direct = integrator(data, [base_point, end])
        detour = integrator(data, [base_point, middle, end])
        worst.record(np.max(np.abs(direct - detour)), end)
    return worst.result(f"{targets} targets, straight path against a two-segment path")


def _first_kind(data, z):
    report = classify(data, z)
    return report.kind == 'first' and report.type.value != 'Unclassified'


def check_curve_invariants(data, points):
    """
    Invariant properties at first-kind samples.

    kappa_nu vanishes, kappa_s is negative and matches its closed form,
    eps_gamma is -1, and sign(kappa_s) agrees with sign(K_E).
    """
    kappa_nu = _Worst('kappa_nu_vanishes', 1e-8)
    negative = _Worst('kappa_s_negative', 0.0)
    agreement = _Worst('kappa_s_closed_vs_general', 1e-7)
    epsilon = _Worst('epsilon_gamma_is_minus_one', 0.0)
    sign = _Worst('sign_kappa_s_matches_K_E', 0.0)
    for z in points:
        if not _first_kind(data, z):
            continue
        try:
            sample = kappa_general(data, z)
            closed = kappa_s_closed(data, z)
        except NotFirstKindError:
            continue
        kappa_nu.record(abs(sample.kappa_nu), z)
        negative.record(max(sample.kappa_s, 0.0), z)
        agreement.record(abs(closed - sample.kappa_s) / abs(closed), z)
        epsilon.record(abs(sample.epsilon_gamma + 1), z)
        k_e = gaussian_curvature_E_cmc(data, z)
        sign.record(0.0 if np.sign(k_e) == np.sign(sample.kappa_s) else 1.0, z)
    return [check.result() for check in (kappa_nu, negative, agreement, epsilon, sign)]


def check_gauss_map_fold(data, points):
    """
    Gauss-map fold at every singular sample.

    det(xi, eta_nu) = -|g_z|^2, d nu(eta_nu) = 0 and |d nu(xi)| = |g_z|^2 / sqrt(2).
    """
    worst = _Worst('gauss_map_fold_determinant', 1e-10)
    kernel = _Worst('gauss_map_null_direction', 1e-10)
    image = _Worst('gauss_map_rank_one', 1e-10)
    for z in points:
        try:
            report = gauss_map_fold(data, z)
        except SurfLabError as exc:
            logger.debug(f"Skipped fold determinant at z={z}: {exc}")
            continue
        g_z = data.g_jet(z, order=1).partial(1, 0)
        worst.record(abs(report.determinant + abs(g_z) ** 2), z)
        kernel.record(report.kernel, z)
        image.record(abs(report.image - abs(g_z) ** 2 / np.sqrt(2.0)), z)
        if not report.is_fold:
            worst.failed = True
    return [worst.result(), kernel.result(), image.result()]


def check_psi_identity(data, points):
    """psi determinant against its closed form, and a vanishing with the conditions."""
    psi = _Worst('psi_identity', 1e-8)
    no_higher = _Worst('no_cuspidal_s_k', 1e-8)
    for z in points:
        try:
            report = psi_analysis(data, z)
        except SurfLabError as exc:
            logger.debug(f"Skipped psi at z={z}: {exc}")
            continue
        psi.record(abs(report.psi - report.psi_closed), z)
        if all(abs(c) < 1e-10 for c in report.conditions):
            no_higher.record(abs(report.a_value), z)
    return [psi.result(), no_higher.result("checked where all three conditions vanish")]
