"""
Singularity Classification
Created by Sergie Code

Decides non-degeneracy, kind and the front property of a singular point and
walks the criteria of the maxface or constant mean curvature pipeline to a
singularity type. Condition values are always reported; values inside the
guard band yield Unclassified instead of a guess.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from config import Config
from src.calculus.tolerance import ZeroState, zero_state
from src.errors import DegenerateError, NotSingularError
from src.surfaces.cmc import cmc_conditions
from src.surfaces.frame import normal_dz
from src.surfaces.maxface import maxface_conditions

logger = logging.getLogger(__name__)


class SingularityType(Enum):
    CUSPIDAL_EDGE = 'CuspidalEdge'
    SWALLOWTAIL = 'Swallowtail'
    CUSPIDAL_BUTTERFLY = 'CuspidalButterfly'
    CUSPIDAL_CROSS_CAP = 'CuspidalCrossCap'
    CUSPIDAL_S1_MINUS = 'CuspidalS1Minus'
    DEGENERATE = 'Degenerate'
    SECOND_KIND_UNRESOLVED = 'SecondKindUnresolved'
    FIRST_KIND_UNRESOLVED = 'FirstKindUnresolved'
    UNCLASSIFIED = 'Unclassified'


@dataclass
class ClassifyReport:
    point: complex
    nondegenerate: bool
    kind: str = None
    is_front: bool = None
    type: SingularityType = SingularityType.UNCLASSIFIED
    conditions: dict = field(default_factory=dict)
    tolerances: dict = field(default_factory=dict)
    pipeline: str = 'maxface'

    def to_dict(self):
        return {
            'point': [self.point.real, self.point.imag],
            'nondegenerate': self.nondegenerate,
            'kind': self.kind,
            'front': self.is_front,
            'type': self.type.value,
            'pipeline': self.pipeline,
            'conditions': dict(self.conditions),
            'tolerances': dict(self.tolerances),
        }


@dataclass(frozen=True)
class FoldReport:
    """Null direction of the Gauss map at a singular point and its transversality."""

    point: complex
    determinant: float
    is_fold: bool
    kernel: float = 0.0
    image: float = 0.0


def _check_on_set(g_value, p):
    if abs(abs(g_value) ** 2 - 1.0) >= Config.ON_SET_TOLERANCE:
        raise NotSingularError(f"p={p} is not on the singular set (|g|^2 - 1 = {abs(g_value) ** 2 - 1.0:.3e})")


def _resolve(report, tol):
    """Walk the decision tree over report.conditions."""
    c = report.conditions
    kind = zero_state(c['im_phi'], tol)
    front = zero_state(c['re_phi'], tol)
    if kind is ZeroState.AMBIGUOUS or front is ZeroState.AMBIGUOUS:
        return SingularityType.UNCLASSIFIED
    report.kind = 'second' if kind is ZeroState.ZERO else 'first'
    report.is_front = front is ZeroState.NONZERO

    if report.is_front and report.kind == 'first':
        return SingularityType.CUSPIDAL_EDGE

    if report.is_front:
        swallowtail = zero_state(c['swallowtail'], tol)
        if swallowtail is ZeroState.NONZERO:
            return SingularityType.SWALLOWTAIL
        if swallowtail is ZeroState.AMBIGUOUS:
            return SingularityType.UNCLASSIFIED
        butterfly = zero_state(c['butterfly'], tol)
        if butterfly is ZeroState.NONZERO:
            return SingularityType.CUSPIDAL_BUTTERFLY
        if butterfly is ZeroState.AMBIGUOUS:
            return SingularityType.UNCLASSIFIED
        return SingularityType.SECOND_KIND_UNRESOLVED

    if report.kind == 'second':
        return SingularityType.SECOND_KIND_UNRESOLVED

    cross_cap = zero_state(c['cross_cap'], tol)
    if cross_cap is ZeroState.NONZERO:
        return SingularityType.CUSPIDAL_CROSS_CAP
    if cross_cap is ZeroState.AMBIGUOUS:
        return SingularityType.UNCLASSIFIED
    if 's1_minus' in c:
        s1_minus = zero_state(c['s1_minus'], tol)
        if s1_minus is ZeroState.NONZERO:
            return SingularityType.CUSPIDAL_S1_MINUS
        if s1_minus is ZeroState.AMBIGUOUS:
            return SingularityType.UNCLASSIFIED
    return SingularityType.FIRST_KIND_UNRESOLVED


def classify(data, p, tol=None, pipeline=None):
    """
    Classify the singular point p.

    Args:
        data: surface data of either pipeline
        p (complex): point on the singular set
        tol (float): zero-test tolerance, Config.ZERO_TOLERANCE by default
        pipeline (str): 'maxface' or 'cmc'; defaults to the data's kind, and
            'cmc' on holomorphic data applies the criteria with zbar terms

    Returns:
        ClassifyReport: verdict with every condition value

    Raises:
        NotSingularError: if |lambda_hat(p)| exceeds the on-set tolerance
    """
    tol = Config.ZERO_TOLERANCE if tol is None else tol
    pipeline = pipeline or data.kind
    pj = data.point_jets(p)
    _check_on_set(pj.g.value, p)
    g_z = pj.g.partial(1, 0)
    report = ClassifyReport(
        point=complex(p),
        nondegenerate=abs(g_z) >= tol,
        pipeline=pipeline,
        tolerances={'zero': tol, 'guard_band': Config.GUARD_BAND_FACTOR * tol,
                    'on_set': Config.ON_SET_TOLERANCE},
    )
    report.conditions['abs_g_z'] = abs(g_z)
    if not report.nondegenerate:
        report.type = SingularityType.DEGENERATE
        logger.debug(f"Degenerate singular point at p={p}")
        return report

    conditions = cmc_conditions(pj) if pipeline == 'cmc' else maxface_conditions(pj)
    report.conditions.update({key: float(value) for key, value in conditions.items()})
    report.type = _resolve(report, tol)
    logger.debug(f"Classified p={p} as {report.type.value}")
    return report


def gauss_map_fold(data, p, tol=None):
    """
    Transversality of the Gauss-map null direction to the singular curve.

    det(xi, eta_nu) = Im(conj(xi) eta_nu) with xi = i conj(g_z/g) and
    eta_nu = conj(g_z/g); equals -|g_z|^2 on the singular set. The report
    also carries |d nu(eta_nu)| = |2Re(eta_nu nu_z)|, which vanishes on the
    singular set, and |d nu(xi)|, which keeps the rank of d nu at one.
    A fold needs all three.

    Raises:
        DegenerateError: if g_z(p) vanishes
    """
    tol = Config.ZERO_TOLERANCE if tol is None else tol
    g_jet = data.g_jet(p, order=1)
    _check_on_set(g_jet.value, p)
    g_z = g_jet.partial(1, 0)
    if abs(g_z) < tol:
        raise DegenerateError(f"g_z vanishes at p={p}")
    ratio = g_z / g_jet.value
    xi = 1j * np.conj(ratio)
    eta_nu = np.conj(ratio)
    determinant = float((np.conj(xi) * eta_nu).imag)
    nu_z = normal_dz(g_jet)
    kernel = float(np.linalg.norm(2.0 * (eta_nu * nu_z).real))
    image = float(np.linalg.norm(2.0 * (xi * nu_z).real))
    is_fold = (abs(determinant) > tol and image > tol
               and kernel <= Config.ON_SET_TOLERANCE * image)
    return FoldReport(complex(p), determinant, is_fold, kernel, image)
