"""
Test Singularity Classification
Created by Sergie Code
"""

import numpy as np
import pytest

from src.calculus.tolerance import ZeroState, zero_state
from src.calculus.wirtinger import Jet, fd_oracle
from src.errors import DegenerateError, NotSingularError
from src.lab.verification import check_gauss_map_fold
from src.singularities.classify import SingularityType, classify, gauss_map_fold
from src.singularities.tracing import trace_singular_curve
from src.surfaces.data import JetData
from src.surfaces.frame import normal_from_g

SWALLOWTAILS = [1 + 0j, 1j, -1 + 0j, -1j]
CROSS_CAPS = [np.exp(1j * (2 * k + 1) * np.pi / 4) for k in range(4)]


def brute_force_conditions(data, z):
    """Maxface conditions from finite-difference jets of phi."""
    def phi(w, wbar):
        pj = data.point_jets(w, order=1)
        return pj.g.partial(1, 0) / (pj.g.value ** 2 * pj.omega.value)

    jet = fd_oracle(phi, z)
    g = data.g_jet(z, order=2)
    g_z = g.partial(1, 0)
    r = g.value / g_z
    r_z = 1.0 - g.value * g.partial(2, 0) / g_z ** 2
    psi1 = r * jet.partial(1, 0)
    second = r * (r_z * jet.partial(1, 0) + r * jet.partial(2, 0))
    return {'re_phi': jet.value.real, 'im_phi': jet.value.imag,
            'swallowtail': psi1.real, 'cross_cap': psi1.imag,
            'butterfly': second.imag, 's1_minus': second.real}


class TestEnneper:

    @pytest.mark.parametrize('z', SWALLOWTAILS)
    def test_swallowtails(self, enneper, z):
        report = classify(enneper, z)
        assert report.type is SingularityType.SWALLOWTAIL
        assert report.kind == 'second'
        assert report.is_front

    @pytest.mark.parametrize('z', CROSS_CAPS)
    def test_cuspidal_cross_caps(self, enneper, z):
        report = classify(enneper, z)
        assert report.type is SingularityType.CUSPIDAL_CROSS_CAP
        assert report.kind == 'first'
        assert not report.is_front

    def test_cuspidal_edges_elsewhere(self, enneper):
        for t in np.linspace(0, 2 * np.pi, 32, endpoint=False) + np.pi / 32:
            assert classify(enneper, np.exp(1j * t)).type is SingularityType.CUSPIDAL_EDGE

    def test_report_carries_conditions(self, enneper):
        report = classify(enneper, np.exp(0.3j))
        assert report.conditions['re_phi'] == pytest.approx(np.cos(0.6))
        assert report.conditions['im_phi'] == pytest.approx(-np.sin(0.6))
        assert report.conditions['abs_g_z'] == pytest.approx(1.0)
        assert report.to_dict()['type'] == 'CuspidalEdge'
        assert report.to_dict()['tolerances']['guard_band'] == pytest.approx(1e-8)

    def test_off_singular_set(self, enneper):
        with pytest.raises(NotSingularError):
            classify(enneper, 0.5 + 0j)


class TestDerivedCases:

    def test_cuspidal_butterfly(self, butterfly):
        report = classify(butterfly, 1 + 0j)
        assert report.type is SingularityType.CUSPIDAL_BUTTERFLY
        assert report.conditions['swallowtail'] == pytest.approx(0.0, abs=1e-12)
        assert report.conditions['butterfly'] == pytest.approx(1.0)

    def test_cuspidal_s1_minus(self, s1_minus):
        report = classify(s1_minus, 1 + 0j)
        assert report.type is SingularityType.CUSPIDAL_S1_MINUS
        assert report.conditions['s1_minus'] == pytest.approx(-1.0)

    def test_fold_points_are_unresolved(self, fold_data):
        for t in (-0.3, 0.0, 0.2):
            report = classify(fold_data, np.exp(1j * t))
            assert report.type is SingularityType.FIRST_KIND_UNRESOLVED

    @pytest.mark.parametrize('name', ['butterfly', 's1_minus'])
    def test_brute_force_agreement(self, request, name):
        data = request.getfixturevalue(name)
        report = classify(data, 1 + 0j)
        for key, value in brute_force_conditions(data, 1 + 0j).items():
            assert report.conditions[key] == pytest.approx(value, abs=1e-6)


class TestEdgeCases:

    def test_degenerate_point(self):
        data = JetData(Jet.constant(1.0), Jet.constant(1.0), kind='maxface')
        report = classify(data, 0j)
        assert report.type is SingularityType.DEGENERATE
        assert not report.nondegenerate

    def test_guard_band_is_unclassified(self):
        g = Jet.from_partials(1.0, {(1, 0): 1.0})
        data = JetData(g, Jet.constant(1.0 / (1.0 + 5e-9j)), kind='maxface')
        report = classify(data, 0j)
        assert report.type is SingularityType.UNCLASSIFIED
        assert report.kind is None

    def test_zero_states(self):
        assert zero_state(5e-10) is ZeroState.ZERO
        assert zero_state(5e-9) is ZeroState.AMBIGUOUS
        assert zero_state(2e-8) is ZeroState.NONZERO
        assert zero_state(0.5, tol=1.0) is ZeroState.ZERO


class TestReduction:
    """The constant mean curvature criteria reproduce maxface verdicts on holomorphic data."""

    @pytest.mark.parametrize('t', np.linspace(0, 2 * np.pi, 16, endpoint=False))
    def test_enneper_samples(self, enneper, cmc_enneper, t):
        z = np.exp(1j * t)
        maxface = classify(enneper, z)
        cmc = classify(cmc_enneper, z)
        assert cmc.type is maxface.type
        assert cmc.conditions['zbar_terms'] < 1e-12

    def test_cmc_pipeline_on_holomorphic_data(self, enneper):
        report = classify(enneper, 1j, pipeline='cmc')
        assert report.pipeline == 'cmc'
        assert report.type is SingularityType.SWALLOWTAIL


class TestGaussMapFold:

    def test_determinant(self, enneper, circle_2z):
        for t in np.linspace(0.1, 6.0, 9):
            assert gauss_map_fold(enneper, np.exp(1j * t)).determinant == pytest.approx(-1.0, abs=1e-10)
            report = gauss_map_fold(circle_2z, 0.5 * np.exp(1j * t))
            assert report.determinant == pytest.approx(-4.0, abs=1e-10)
            assert report.is_fold

    @pytest.mark.parametrize('name', ['enneper', 'circle_2z', 'cmc_enneper'])
    def test_null_direction_on_traced_curve(self, request, name):
        data = request.getfixturevalue(name)
        seed = 0.6 + 0j if name == 'circle_2z' else 1.1 + 0j
        curve = trace_singular_curve(data, seed)
        h = 1e-4
        for z in curve.points[::25]:
            report = gauss_map_fold(data, z)
            g_z = data.g_jet(z, order=1).partial(1, 0)
            assert report.is_fold
            assert report.kernel < 1e-10
            assert report.image == pytest.approx(abs(g_z) ** 2 / np.sqrt(2.0), abs=1e-10)
            g = data.g_jet(z, order=0).value
            eta_nu = np.conj(g_z / g)
            xi = 1j * eta_nu

            def normal_along(direction):
                ahead = data.g_jet(z + h * direction, order=0).value
                behind = data.g_jet(z - h * direction, order=0).value
                return (normal_from_g(ahead) - normal_from_g(behind)) / (2 * h)

            assert np.linalg.norm(normal_along(eta_nu)) < 1e-6
            assert np.linalg.norm(normal_along(xi)) == pytest.approx(report.image, rel=1e-6)

    def test_suite_check_on_traced_curve(self, circle_2z):
        curve = trace_singular_curve(circle_2z, 0.6 + 0j)
        results = check_gauss_map_fold(circle_2z, curve.points[::10])
        assert [result.name for result in results] == [
            'gauss_map_fold_determinant', 'gauss_map_null_direction', 'gauss_map_rank_one']
        assert all(result.passed for result in results)
        assert all(result.samples > 0 for result in results)

    def test_degenerate(self):
        data = JetData(Jet.constant(1.0), Jet.constant(1.0), kind='maxface')
        with pytest.raises(DegenerateError):
            gauss_map_fold(data, 0j)
