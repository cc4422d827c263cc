"""
Surface Data
Created by Sergie Code

Input descriptions for the two pipelines: holomorphic data (g, omega_hat)
for maxfaces and an extended harmonic map g with constant H for constant
mean curvature surfaces. Also loads the JSON surface description files.
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from config import Config
from src.errors import (ConfigError, DataConditionError, DomainError, ExplicitOmegaRequiredError,
                        OnSingularSetError)
from src.expressions.domain import Disk, domain_from_dict
from src.expressions.evaluator import eval_jet, evaluate
from src.expressions.parser import parse, to_text
from src.expressions.validation import structural_violations, validate_holomorphic
from src.surfaces.cmc import omega_jet_from_g
from src.surfaces.frame import PointJets, tangent_values

logger = logging.getLogger(__name__)


def _as_tree(expression, field_name):
    if expression is None:
        return None
    if isinstance(expression, str):
        return parse(expression)
    if isinstance(expression, (int, float)):
        return parse(repr(float(expression)))
    return expression


def _describe_violation(violation):
    where = f" at byte {violation.offset}" if violation.offset is not None else ""
    return f"{violation.source}: {violation.message}{where}"


class SurfaceData:
    """Shared behaviour of the surface descriptions."""

    kind = None
    scale = None
    H = None

    def _check_inside(self, z):
        if np.ndim(z) == 0 and not self.domain.contains(z):
            raise DomainError(f"z={complex(z)} lies outside the domain")

    def g_jet(self, z, order=None):
        order = Config.JET_ORDER if order is None else order
        self._check_inside(z)
        return eval_jet(self.g, z, order)

    def omega_jet(self, g_jet, z, order):
        raise NotImplementedError

    def point_jets(self, z, order=None):
        """
        Jets of g and omega_hat at z.

        Args:
            z (complex | np.ndarray): point or points of the domain
            order (int): jet order of g

        Returns:
            PointJets: jets plus the pipeline scale
        """
        order = Config.JET_ORDER if order is None else order
        g = self.g_jet(z, order)
        return PointJets(g, self.omega_jet(g, z, order), self.scale, self.kind, self.H)

    def tangent_order(self):
        return 0

    def tangent(self, z):
        """Vectorised f_z at the points z, shaped (3, *z.shape)."""
        z = np.asarray(z, dtype=complex)
        values = tangent_values(self.point_jets(z, order=self.tangent_order()))
        # constant data evaluates to one value per component
        *parts, _ = np.broadcast_arrays(*values, z)
        return np.stack(parts)


class HolomorphicData(SurfaceData):
    """
    Holomorphic data (g, omega_hat dz) of a maxface.

    Args:
        g (str | tree): meromorphic g without zbar terms
        omega_hat (str | tree): holomorphic coefficient of omega
        domain (DomainSpec): simply-connected parameter domain
        name (str): label used in reports
        allow_multiply_connected (bool): accept annuli anyway
    """

    kind = 'maxface'
    scale = 0.5

    def __init__(self, g, omega_hat, domain, name='', allow_multiply_connected=False):
        self.g = _as_tree(g, 'g')
        self.omega_hat = _as_tree(omega_hat, 'omega')
        if self.omega_hat is None:
            raise ConfigError("maxface data requires omega")
        self.domain = domain
        self.name = name
        if not domain.simply_connected and not allow_multiply_connected:
            raise ConfigError("maxface data requires a simply-connected domain")
        report = validate_holomorphic(self.g, self.omega_hat, domain)
        if not report.ok:
            listing = '; '.join(_describe_violation(v) for v in report.violations)
            raise ConfigError(f"holomorphic data required: {listing}")
        for warning in report.warnings:
            logger.warning(f"Surface '{name}': {_describe_violation(warning)}")

    def omega_jet(self, g_jet, z, order):
        omega = eval_jet(self.omega_hat, z, order)
        if np.ndim(z) == 0:
            density = (1.0 + abs(g_jet.value) ** 2) ** 2 * abs(omega.value) ** 2
            if density < Config.ZERO_TOLERANCE:
                raise DataConditionError(f"(1+|g|^2)^2 |omega|^2 vanishes at z={complex(z)}")
        return omega

    def describe(self):
        return {'kind': self.kind, 'g': to_text(self.g), 'omega': to_text(self.omega_hat)}


class HarmonicData(SurfaceData):
    """
    Extended harmonic map g with nonzero constant H.

    omega_hat follows the formula conj(g)_z / (1 - |g|^2)^2 unless an
    explicit expression continuing it across |g| = 1 is given.
    """

    kind = 'cmc'

    def __init__(self, g, H, domain, omega=None, name=''):
        self.g = _as_tree(g, 'g')
        try:
            H = float(H)
        except (TypeError, ValueError):
            raise ConfigError("H must be a number")
        if H == 0 or not np.isfinite(H):
            raise ConfigError("H must be a nonzero finite constant")
        self.H = H
        self.scale = 1.0 / H
        self.omega = _as_tree(omega, 'omega')
        self.domain = domain
        self.name = name

    @property
    def omega_mode(self):
        return 'formula' if self.omega is None else 'explicit'

    @property
    def g_is_holomorphic(self):
        return not structural_violations(self.g)

    def omega_jet(self, g_jet, z, order):
        if self.omega is not None:
            return eval_jet(self.omega, z, order)
        try:
            return omega_jet_from_g(g_jet)
        except OnSingularSetError:
            raise ExplicitOmegaRequiredError(
                "omega must be given explicitly to continue across |g| = 1")

    def tangent_order(self):
        return 1 if self.omega is None else 0

    def require_formula_region(self, points):
        """
        Refuse formula-mode omega_hat on point sets reaching |g| = 1.

        Raises:
            ExplicitOmegaRequiredError: if 1 - |g|^2 vanishes or changes sign
        """
        if self.omega is not None:
            return
        rho = 1.0 - np.abs(evaluate(self.g, points)) ** 2
        if np.any(np.abs(rho) < Config.ON_SET_TOLERANCE) or (rho.min() < 0 < rho.max()):
            raise ExplicitOmegaRequiredError(
                "the region crosses |g| = 1; give omega explicitly")

    def describe(self):
        described = {'kind': self.kind, 'g': to_text(self.g), 'H': self.H}
        if self.omega is not None:
            described['omega'] = to_text(self.omega)
        return described


class JetData(SurfaceData):
    """
    Synthetic data fixed by jets at a single point.

    Lets pointwise identities be checked on jets that satisfy the
    constraints of a singular point without a closed-form surface.
    """

    def __init__(self, g, omega, kind='cmc', H=2.0, point=0j, name='synthetic'):
        self.g = g
        self.omega = omega
        self.kind = kind
        self.H = float(H) if kind == 'cmc' else None
        self.scale = 1.0 / self.H if kind == 'cmc' else 0.5
        self.point = complex(point)
        self.domain = Disk(self.point, 1e-6)
        self.name = name

    def g_jet(self, z, order=None):
        self._check_inside(z)
        return self.g

    def omega_jet(self, g_jet, z, order):
        return self.omega


@dataclass(frozen=True)
class PathSpec:
    """Polyline from a base point to a target."""

    waypoints: tuple

    @classmethod
    def straight(cls, start, end):
        return cls((complex(start), complex(end)))

    def check(self, domain):
        points = np.asarray(self.waypoints, dtype=complex)
        if not np.all(domain.contains(points)):
            raise DomainError("path waypoints must lie inside the domain")
        return self


@dataclass
class SurfaceConfig:
    """A surface description loaded from a config file."""

    data: SurfaceData
    name: str = 'surface'
    resolution: int = 64
    seeds: tuple = ()
    base_point: complex = None
    extra: dict = field(default_factory=dict)

    @property
    def origin(self):
        return self.data.domain.base_point() if self.base_point is None else self.base_point


def _pair(value, name):
    try:
        re_part, im_part = value
        return complex(float(re_part), float(im_part))
    except (TypeError, ValueError):
        raise ConfigError(f"{name} must be a [re, im] pair")


def surface_from_dict(spec, name=None):
    """
    Build a SurfaceConfig from its JSON description.

    Raises:
        ConfigError: on missing or malformed fields
    """
    if not isinstance(spec, dict):
        raise ConfigError("surface description must be a JSON object")
    kind = spec.get('kind')
    if 'domain' not in spec:
        raise ConfigError("surface description is missing 'domain'")
    if 'g' not in spec:
        raise ConfigError("surface description is missing 'g'")
    domain = domain_from_dict(spec['domain'])
    name = spec.get('name') or name or 'surface'

    if kind == 'maxface':
        if 'omega' not in spec:
            raise ConfigError("maxface description is missing 'omega'")
        data = HolomorphicData(spec['g'], spec['omega'], domain, name,
                               bool(spec.get('allow_multiply_connected', False)))
    elif kind == 'cmc':
        if 'H' not in spec:
            raise ConfigError("cmc description is missing 'H'")
        data = HarmonicData(spec['g'], spec['H'], domain, spec.get('omega'), name)
    else:
        raise ConfigError(f"unknown surface kind: {kind!r}")

    resolution = spec.get('resolution', 64)
    if not isinstance(resolution, int) or isinstance(resolution, bool):
        raise ConfigError("resolution must be an integer")
    seeds = tuple(_pair(seed, 'seed') for seed in spec.get('seeds', ()))
    base_point = _pair(spec['base_point'], 'base_point') if 'base_point' in spec else None
    if base_point is not None and not domain.contains(base_point):
        raise ConfigError("base_point must lie inside the domain")
    return SurfaceConfig(data, name, resolution, seeds, base_point)


def load_surface_config(path):
    """Load a surface description file."""
    path = Path(path)
    try:
        spec = json.loads(path.read_text(encoding='utf-8'))
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}")
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON in {path}: {exc}")
    logger.info(f"Loaded surface config: {path}")
    return surface_from_dict(spec, name=path.stem)
