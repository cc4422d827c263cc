"""
Test Maxface Pipeline
Created by Sergie Code
"""

import logging

import numpy as np
import pytest

from config import Config
from src.calculus.wirtinger import Jet
from src.errors import (ConfigError, DataConditionError, DegenerateError, DomainError, NotSingularError,
                        OnSingularSetError)
from src.expressions.domain import Annulus, Disk
from src.surfaces.data import HolomorphicData, JetData, PathSpec
from src.surfaces.maxface import gaussian_curvature_E, gaussian_curvature_L, integrate, psi_analysis


class TestHolomorphicData:

    def test_zbar_is_rejected(self):
        with pytest.raises(ConfigError) as info:
            HolomorphicData('z + zbar', '1', Disk(0j, 1.0))
        assert 'byte 4' in str(info.value)

    def test_annulus_needs_opt_in(self):
        with pytest.raises(ConfigError):
            HolomorphicData('z', '1', Annulus(0j, 0.5, 1.0))
        data = HolomorphicData('z', '1', Annulus(0j, 0.5, 1.0), allow_multiply_connected=True)
        assert data.domain.simply_connected is False

    def test_unit_modulus_g_is_rejected(self):
        with pytest.raises(ConfigError) as info:
            HolomorphicData('i', '1', Disk(0j, 1.0))
        assert '1 - |g|^2' in str(info.value)

    def test_vanishing_omega_is_rejected(self):
        with pytest.raises(ConfigError) as info:
            HolomorphicData('z', '0', Disk(0j, 1.0))
        assert 'omega' in str(info.value)

    def test_isolated_omega_zero_is_logged(self, caplog, monkeypatch):
        monkeypatch.setattr(Config, 'VALIDATION_GRID', 5)
        with caplog.at_level(logging.WARNING):
            data = HolomorphicData('z + 1', 'z', Disk(0j, 1.0), name='pinched')
        assert any("Surface 'pinched'" in record.getMessage() for record in caplog.records)
        with pytest.raises(DataConditionError):
            data.point_jets(0j)
        assert data.point_jets(0.5 + 0j).omega.value == pytest.approx(0.5)

    def test_describe(self, enneper):
        assert enneper.describe() == {'kind': 'maxface', 'g': 'z', 'omega': '1.0'}

    def test_point_outside_domain(self, enneper):
        with pytest.raises(DomainError):
            enneper.point_jets(2 + 0j)


class TestIntegration:

    def test_enneper_point(self, enneper):
        np.testing.assert_allclose(integrate(enneper, [0j, 1 + 0j]), [-1.0, 4 / 3, 0.0], atol=1e-12)

    def test_path_spec_is_checked(self, enneper):
        with pytest.raises(DomainError):
            integrate(enneper, PathSpec.straight(0j, 2 + 0j))

    def test_path_independence(self, enneper):
        direct = integrate(enneper, PathSpec.straight(0j, 0.5 + 1j))
        detour = integrate(enneper, PathSpec((0j, -1 + 0.2j, 0.5 + 1j)))
        np.testing.assert_allclose(direct, detour, atol=1e-9)

    def test_constant_data(self):
        data = HolomorphicData('0.5', '1', Disk(0j, 1.0))
        np.testing.assert_allclose(integrate(data, [0j, 0.5]), [-0.5, 0.625, 0.0], atol=1e-12)
        assert data.tangent(np.array([0j, 0.25, 0.5j])).shape == (3, 3)

    def test_zero_length_path(self, enneper):
        np.testing.assert_array_equal(integrate(enneper, [0.5j, 0.5j]), np.zeros(3))


class TestCurvatures:

    def test_gaussian_curvature_on_singular_set(self, enneper):
        for t in np.linspace(0.1, 6.0, 7):
            assert gaussian_curvature_E(enneper, np.exp(1j * t)) == pytest.approx(-1 / 16, abs=1e-10)

    def test_circle_2z_curvature(self, circle_2z):
        assert gaussian_curvature_E(circle_2z, 0.5j) == pytest.approx(-0.25)

    def test_lorentzian_curvature(self, enneper):
        assert gaussian_curvature_L(enneper, 0j) == pytest.approx(1.0)
        assert gaussian_curvature_L(enneper, 2 ** 0.5 + 0j) == pytest.approx(1.0)
        assert gaussian_curvature_L(enneper, 0.5 + 0j) == pytest.approx(1 / 0.75 ** 4)

    def test_lorentzian_curvature_on_singular_set(self, enneper):
        with pytest.raises(OnSingularSetError):
            gaussian_curvature_L(enneper, 1 + 0j)


class TestPsi:

    @pytest.mark.parametrize('t', np.linspace(0.05, 6.2, 50))
    def test_psi_matches_closed_form(self, enneper, t):
        report = psi_analysis(enneper, np.exp(1j * t))
        assert report.psi == pytest.approx(report.psi_closed, abs=1e-8)
        assert report.psi_closed == pytest.approx(np.sin(4 * t), abs=1e-12)

    def test_s1_minus_conditions(self, s1_minus):
        report = psi_analysis(s1_minus, 1 + 0j)
        np.testing.assert_allclose(report.conditions, (0.0, 0.0, -1.0), atol=1e-8)
        assert report.a_value == pytest.approx(-32.0, abs=1e-8)

    def test_off_singular_set(self, enneper):
        with pytest.raises(NotSingularError):
            psi_analysis(enneper, 0.5 + 0j)

    def test_degenerate_point(self):
        data = JetData(Jet.constant(1.0), Jet.constant(1.0), kind='maxface')
        with pytest.raises(DegenerateError):
            psi_analysis(data, 0j)
