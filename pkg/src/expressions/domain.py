"""
Parameter domains for surface data.
Created by Sergie Code
"""

from dataclasses import dataclass

import numpy as np

from src.errors import ConfigError


class DomainSpec:
    """Common interface of the parameter domains."""

    shape = None
    simply_connected = True

    def contains(self, z):
        raise NotImplementedError

    def bounds(self):
        """Return (u_min, u_max, v_min, v_max) of the sampling window."""
        raise NotImplementedError

    def base_point(self):
        raise NotImplementedError

    def grid(self, resolution):
        """Row-major node coordinates of a resolution x resolution grid."""
        u_min, u_max, v_min, v_max = self.bounds()
        u = np.linspace(u_min, u_max, resolution)
        v = np.linspace(v_min, v_max, resolution)
        return u[np.newaxis, :] + 1j * v[:, np.newaxis]

    def sample_points(self, resolution):
        """Grid nodes strictly inside the domain, as a flat array."""
        nodes = self.grid(resolution).ravel()
        return nodes[self.contains(nodes)]


@dataclass(frozen=True)
class Disk(DomainSpec):
    center: complex
    radius: float
    shape = 'disk'

    def contains(self, z):
        return np.abs(np.asarray(z) - self.center) < self.radius

    def bounds(self):
        c, r = self.center, self.radius
        return c.real - r, c.real + r, c.imag - r, c.imag + r

    def base_point(self):
        return complex(self.center)

    def to_dict(self):
        return {'shape': 'disk', 'center': [self.center.real, self.center.imag],
                'radius': self.radius}


@dataclass(frozen=True)
class Annulus(DomainSpec):
    center: complex
    r_in: float
    r_out: float
    shape = 'annulus'
    simply_connected = False

    def contains(self, z):
        r = np.abs(np.asarray(z) - self.center)
        return (r > self.r_in) & (r < self.r_out)

    def bounds(self):
        c, r = self.center, self.r_out
        return c.real - r, c.real + r, c.imag - r, c.imag + r

    def base_point(self):
        return complex(self.center + 0.5 * (self.r_in + self.r_out))

    def to_dict(self):
        return {'shape': 'annulus', 'center': [self.center.real, self.center.imag],
                'r_in': self.r_in, 'r_out': self.r_out}


@dataclass(frozen=True)
class HalfPlane(DomainSpec):
    """Points whose `axis` coordinate exceeds `bound`; sampled over a window of `extent`."""

    axis: str
    bound: float
    extent: float = 1.0
    shape = 'halfplane'

    def contains(self, z):
        z = np.asarray(z)
        coordinate = z.real if self.axis == 'u' else z.imag
        return coordinate > self.bound

    def bounds(self):
        low, high = self.bound, self.bound + 2 * self.extent
        if self.axis == 'u':
            return low, high, -self.extent, self.extent
        return -self.extent, self.extent, low, high

    def base_point(self):
        mid = self.bound + self.extent
        return complex(mid, 0.0) if self.axis == 'u' else complex(0.0, mid)

    def to_dict(self):
        return {'shape': 'halfplane', 'axis': self.axis, 'bound': self.bound,
                'extent': self.extent}


@dataclass(frozen=True)
class Rectangle(DomainSpec):
    u_min: float
    u_max: float
    v_min: float
    v_max: float
    shape = 'rectangle'

    def contains(self, z):
        z = np.asarray(z)
        return ((z.real > self.u_min) & (z.real < self.u_max)
                & (z.imag > self.v_min) & (z.imag < self.v_max))

    def bounds(self):
        return self.u_min, self.u_max, self.v_min, self.v_max

    def base_point(self):
        return complex(0.5 * (self.u_min + self.u_max), 0.5 * (self.v_min + self.v_max))

    def to_dict(self):
        return {'shape': 'rectangle', 'u_min': self.u_min, 'u_max': self.u_max,
                'v_min': self.v_min, 'v_max': self.v_max}


def _complex(value, name):
    try:
        re_part, im_part = value
        return complex(float(re_part), float(im_part))
    except (TypeError, ValueError):
        raise ConfigError(f"domain field {name!r} must be a [re, im] pair")


def _number(spec, name):
    try:
        value = float(spec[name])
    except KeyError:
        raise ConfigError(f"domain is missing field {name!r}")
    except (TypeError, ValueError):
        raise ConfigError(f"domain field {name!r} must be a number")
    if not np.isfinite(value):
        raise ConfigError(f"domain field {name!r} must be finite")
    return value


def domain_from_dict(spec):
    """
    Build a domain from its JSON description.

    Args:
        spec (dict): {"shape": ..., shape-specific fields}

    Returns:
        DomainSpec: the parsed domain

    Raises:
        ConfigError: on unknown shapes or an empty interior
    """
    if not isinstance(spec, dict):
        raise ConfigError("domain must be an object")
    shape = spec.get('shape')
    if shape == 'disk':
        radius = _number(spec, 'radius')
        if radius <= 0:
            raise ConfigError("disk radius must be positive")
        return Disk(_complex(spec.get('center', (0, 0)), 'center'), radius)
    if shape == 'annulus':
        r_in, r_out = _number(spec, 'r_in'), _number(spec, 'r_out')
        if not 0 <= r_in < r_out:
            raise ConfigError("annulus needs 0 <= r_in < r_out")
        return Annulus(_complex(spec.get('center', (0, 0)), 'center'), r_in, r_out)
    if shape == 'halfplane':
        axis = spec.get('axis')
        if axis not in ('u', 'v'):
            raise ConfigError("halfplane axis must be 'u' or 'v'")
        extent = _number(spec, 'extent') if 'extent' in spec else 1.0
        if extent <= 0:
            raise ConfigError("halfplane extent must be positive")
        return HalfPlane(axis, _number(spec, 'bound'), extent)
    if shape == 'rectangle':
        values = [_number(spec, name) for name in ('u_min', 'u_max', 'v_min', 'v_max')]
        if not (values[0] < values[1] and values[2] < values[3]):
            raise ConfigError("rectangle needs u_min < u_max and v_min < v_max")
        return Rectangle(*values)
    raise ConfigError(f"unknown domain shape: {shape!r}")
