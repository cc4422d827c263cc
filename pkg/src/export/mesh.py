"""
Mesh building and OBJ export.
Created by Sergie Code

Vertices are the grid nodes inside the domain, in row-major order, placed
at f(node) - f(base point). Every grid edge of a breadth-first spanning
tree is integrated once. Traced singular curves are appended as extra
vertices and exported as polylines.
"""

import csv
import logging
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from config import Config
from src.calculus.quadrature import line_integral
from src.errors import ConfigError, SurfLabError
from src.surfaces.cmc import check_closed_at, gaussian_curvature_E_cmc, gaussian_curvature_L_cmc
from src.surfaces.maxface import gaussian_curvature_E, gaussian_curvature_L

logger = logging.getLogger(__name__)

ATTRIBUTE_NAMES = ('lambda_hat', 'K_E', 'K_L')


@dataclass
class Mesh:
    vertices: np.ndarray
    faces: list = field(default_factory=list)
    polylines: list = field(default_factory=list)
    closed: list = field(default_factory=list)
    attributes: dict = field(default_factory=dict)
    nodes: np.ndarray = None

    @property
    def vertex_count(self):
        return len(self.vertices)


def _spanning_positions(data, grid, inside, base_point):
    """f - f(base_point) on every node reachable from the node nearest the base point."""
    rows, cols = grid.shape
    candidates = np.argwhere(inside)
    distances = np.abs(grid[inside] - base_point)
    start = tuple(candidates[int(np.argmin(distances))])
    positions = {start: line_integral(data.tangent, [base_point, grid[start]])}
    queue = deque([start])
    while queue:
        j, i = queue.popleft()
        for dj, di in ((0, 1), (1, 0), (0, -1), (-1, 0)):
            neighbour = (j + dj, i + di)
            if not (0 <= neighbour[0] < rows and 0 <= neighbour[1] < cols):
                continue
            if not inside[neighbour] or neighbour in positions:
                continue
            edge = line_integral(data.tangent, [grid[j, i], grid[neighbour]])
            positions[neighbour] = positions[(j, i)] + edge
            queue.append(neighbour)
    return positions


def _attribute(func, data, z):
    try:
        return float(func(data, z))
    except SurfLabError:
        return float('nan')


def vertex_attributes(data, z):
    """lambda_hat, K_E and K_L at a parameter point; NaN where undefined."""
    lam = abs(data.g_jet(z, order=0).value) ** 2 - 1.0
    if data.kind == 'cmc':
        k_e, k_l = gaussian_curvature_E_cmc, gaussian_curvature_L_cmc
    else:
        k_e, k_l = gaussian_curvature_E, gaussian_curvature_L
    return {
        'lambda_hat': lam,
        'K_E': _attribute(k_e, data, z),
        'K_L': float('nan') if abs(lam) < Config.ON_SET_TOLERANCE else _attribute(k_l, data, z),
    }


def build_mesh(data, resolution, base_point=None, curves=()):
    """
    Sample f over the domain grid.

    Args:
        data: surface data of either pipeline
        resolution (int): nodes per axis, at least 2
        base_point (complex): point mapped to the origin, domain base point by default
        curves (sequence): traced SingularCurve objects exported as polylines

    Returns:
        Mesh: vertices, triangles, polylines and per-vertex attributes

    Raises:
        ConfigError: if resolution < 2 or no grid node lies inside the domain
        ExplicitOmegaRequiredError: formula-mode data over a region reaching |g| = 1
        NotClosedError: constant mean curvature data whose one-form is not closed
    """
    if resolution < 2:
        raise ConfigError("resolution must be at least 2")
    base_point = data.domain.base_point() if base_point is None else complex(base_point)
    grid = data.domain.grid(resolution)
    inside = np.asarray(data.domain.contains(grid))
    if not inside.any():
        raise ConfigError(f"no grid node lies inside the domain at resolution {resolution}")

    if data.kind == 'cmc':
        if hasattr(data, 'require_formula_region'):
            data.require_formula_region(grid[inside])
        check_closed_at(data, grid[inside])

    logger.info(f"Building {resolution}x{resolution} mesh")
    positions = _spanning_positions(data, grid, inside, base_point)
    ordered = sorted(positions)
    index = {node: k for k, node in enumerate(ordered)}
    vertices = [positions[node] for node in ordered]
    nodes = [complex(grid[node]) for node in ordered]

    faces = []
    for j in range(resolution - 1):
        for i in range(resolution - 1):
            corners = [(j, i), (j, i + 1), (j + 1, i + 1), (j + 1, i)]
            if all(corner in index for corner in corners):
                a, b, c, d = (index[corner] for corner in corners)
                faces.extend([(a, b, c), (a, c, d)])

    polylines, closed = [], []
    grid_points = np.array(nodes)
    for curve in curves:
        line = []
        for z in curve.points:
            nearest = int(np.argmin(np.abs(grid_points - z)))
            offset = line_integral(data.tangent, [nodes[nearest], complex(z)])
            line.append(len(vertices))
            vertices.append(vertices[nearest] + offset)
            nodes.append(complex(z))
        if line:
            polylines.append(line)
            closed.append(bool(curve.closed))

    table = [vertex_attributes(data, z) for z in nodes]
    attributes = {name: np.array([row[name] for row in table]) for name in ATTRIBUTE_NAMES}
    mesh = Mesh(np.array(vertices), faces, polylines, closed, attributes, np.array(nodes))
    logger.info(f"Mesh has {mesh.vertex_count} vertices, {len(faces)} faces, {len(polylines)} polylines")
    return mesh


def _format(value, float_format):
    return format(float(value), float_format)


def write_obj(mesh, path, float_format=None):
    """Write v, f and l records; indices are 1-based and closed polylines repeat their first vertex."""
    float_format = Config.FLOAT_FORMAT if float_format is None else float_format
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = ['# surflab mesh']
    for vertex in mesh.vertices:
        lines.append('v ' + ' '.join(_format(x, float_format) for x in vertex))
    for face in mesh.faces:
        lines.append('f ' + ' '.join(str(k + 1) for k in face))
    for polyline, is_closed in zip(mesh.polylines, mesh.closed):
        indices = list(polyline) + ([polyline[0]] if is_closed else [])
        lines.append('l ' + ' '.join(str(k + 1) for k in indices))
    path.write_text('\n'.join(lines) + '\n', encoding='utf-8')
    logger.info(f"Wrote OBJ mesh: {path}")
    return path


def attributes_path(path):
    path = Path(path)
    return path.with_name(path.name + '.attrs.csv')


def write_attributes(mesh, path, float_format=None):
    """Per-vertex attribute table next to the OBJ file."""
    float_format = Config.FLOAT_FORMAT if float_format is None else float_format
    target = attributes_path(path)
    with open(target, 'w', newline='', encoding='utf-8') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(('vertex',) + ATTRIBUTE_NAMES)
        for k in range(mesh.vertex_count):
            writer.writerow([k + 1] + [_format(mesh.attributes[name][k], float_format)
                                       for name in ATTRIBUTE_NAMES])
    logger.info(f"Wrote vertex attributes: {target}")
    return target
