"""
Holomorphy checks for Weierstrass data.
Created by Sergie Code

Structural holomorphy is decided on the tree. The nondegeneracy conditions
on (g, omega) are sampled on a grid; sampled failures are warnings, except
a modulus |g| = 1 or a vanishing omega holding identically, which are violations.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from config import Config
from src.errors import EvaluationError
from src.expressions.evaluator import evaluate
from src.expressions.parser import Unary, Variable, walk
from src.expressions.domain import Disk

logger = logging.getLogger(__name__)

_NON_HOLOMORPHIC_OPS = frozenset({'conj', 're', 'im', 'abs2'})


@dataclass(frozen=True)
class Violation:
    kind: str
    message: str
    offset: int = None
    source: str = 'g'


@dataclass
class HolomorphyReport:
    violations: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    samples: int = 0
    omega_zero_count: int = 0
    modulus_one_identically: bool = False

    @property
    def ok(self):
        return not self.violations


def structural_violations(ast, source='g'):
    """List every zbar/conj/re/im/abs2 node of a tree with its offset."""
    violations = []
    for node in walk(ast):
        if isinstance(node, Variable) and node.name == 'zbar':
            violations.append(Violation('zbar', "zbar is not holomorphic", node.offset, source))
        elif isinstance(node, Unary) and node.op in _NON_HOLOMORPHIC_OPS:
            violations.append(Violation(node.op, f"{node.op}() is not holomorphic", node.offset, source))
    return violations


def validate_holomorphic(g, omega=None, domain=None, grid=None, tol=None):
    """
    Check that (g, omega) can serve as holomorphic data.

    Args:
        g: expression tree of g
        omega: expression tree of omega_hat, optional
        domain (DomainSpec): sampling domain, the unit disk by default
        grid (int): sampling resolution per axis
        tol (float): zero threshold for the sampled conditions

    Returns:
        HolomorphyReport: structural violations plus sampled condition checks
    """
    tol = Config.ZERO_TOLERANCE if tol is None else tol
    grid = Config.VALIDATION_GRID if grid is None else grid
    domain = Disk(0j, 1.0) if domain is None else domain

    report = HolomorphyReport(violations=structural_violations(g, 'g'))
    if omega is not None:
        report.violations.extend(structural_violations(omega, 'omega'))

    points = domain.sample_points(grid)
    report.samples = int(points.size)
    if points.size == 0:
        return report
    try:
        g_values = np.broadcast_to(evaluate(g, points), points.shape)
        omega_values = (np.broadcast_to(evaluate(omega, points), points.shape)
                        if omega is not None else None)
    except EvaluationError as exc:
        report.warnings.append(Violation('evaluation', f"sampled evaluation failed: {exc}", exc.offset))
        return report

    modulus = np.abs(g_values) ** 2
    if np.all(np.abs(1.0 - modulus) < tol):
        report.modulus_one_identically = True
        report.violations.append(Violation('modulus', "1 - |g|^2 vanishes identically on the sample grid"))

    if omega_values is not None:
        density = (1.0 + modulus) ** 2 * np.abs(omega_values) ** 2
        report.omega_zero_count = int(np.count_nonzero(density < tol))
        if report.omega_zero_count == report.samples:
            report.violations.append(Violation('omega_zero', "omega vanishes identically on the sample grid",
                                               source='omega'))
        elif report.omega_zero_count:
            message = f"(1+|g|^2)^2 |omega|^2 vanishes at {report.omega_zero_count} sample points"
            report.warnings.append(Violation('omega_zero', message, source='omega'))
            logger.warning(message)
    return report
