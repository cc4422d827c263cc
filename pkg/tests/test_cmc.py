"""
Test Constant Mean Curvature Pipeline
Created by Sergie Code
"""

import numpy as np
import pytest

from src.calculus.wirtinger import Jet
from src.errors import ConfigError, DegenerateError, ExplicitOmegaRequiredError, NotClosedError
from src.expressions.domain import Disk
from src.expressions.parser import parse
from src.surfaces.cmc import (butterfly_test_cmc, check_closed, closedness_residual,
                              gaussian_curvature_E_cmc, gaussian_curvature_L_cmc,
                              harmonicity_residual, integrate_cmc, omega_from_g, xi_f_closed)
from src.surfaces.data import HarmonicData, JetData
from src.surfaces.frame import tangent_values


@pytest.fixture
def hyperbolic():
    return HarmonicData('zbar/2', 2.0, Disk(0j, 1.0), name='cmc_hyperbolic')


class TestHarmonicData:

    def test_zero_mean_curvature_is_rejected(self):
        with pytest.raises(ConfigError):
            HarmonicData('z', 0, Disk(0j, 1.0))
        with pytest.raises(ConfigError):
            HarmonicData('z', 'flat', Disk(0j, 1.0))

    def test_omega_modes(self, hyperbolic, cmc_enneper):
        assert hyperbolic.omega_mode == 'formula'
        assert cmc_enneper.omega_mode == 'explicit'
        assert not hyperbolic.g_is_holomorphic
        assert cmc_enneper.g_is_holomorphic

    def test_formula_omega_value(self, hyperbolic):
        assert hyperbolic.point_jets(0j).omega.value == pytest.approx(0.5)

    def test_formula_omega_needs_explicit_form_on_the_set(self):
        data = HarmonicData('z', 2.0, Disk(0j, 1.5))
        with pytest.raises(ExplicitOmegaRequiredError):
            data.point_jets(1 + 0j)
        with pytest.raises(ExplicitOmegaRequiredError):
            data.require_formula_region(np.array([0.5, 1.2]))

    def test_describe(self, cmc_enneper):
        assert cmc_enneper.describe() == {'kind': 'cmc', 'g': 'z', 'H': 2.0, 'omega': '1.0'}


class TestHarmonicity:

    def test_non_harmonic_example(self):
        report = harmonicity_residual(parse('z*zbar'), z=2 + 0j)
        assert report.omega_value == pytest.approx(2 / 225)
        assert report.residual == pytest.approx(-17 / 15)
        assert not report.harmonic

    def test_antiholomorphic_map_is_harmonic(self):
        report = harmonicity_residual(parse('zbar/2'), z=0.3 + 0.2j)
        assert report.harmonic
        assert report.omega_nonzero

    def test_explicit_omega_jet(self):
        g = Jet.from_partials(0.5, {(0, 1): 1.0}, order=2)
        report = harmonicity_residual(g, Jet.constant(2.0), z=0j)
        assert report.residual == pytest.approx(0.0)
        assert report.g2omega_nonzero

    def test_omega_formula_value(self):
        g = Jet.from_partials(0.0, {(0, 1): 0.5}, order=2)
        assert omega_from_g(g) == pytest.approx(0.5)


class TestClosedness:

    def test_harmonic_map_gives_closed_form(self, hyperbolic):
        report = closedness_residual(hyperbolic, 0.3 + 0.1j)
        assert report.magnitude < 1e-12

    def test_vectorised_residual(self, hyperbolic):
        points = np.array([0.1j, 0.2 - 0.3j, 0.5 + 0j])
        report = closedness_residual(hyperbolic, points)
        assert report.residual.shape == (3, 3)
        assert np.all(report.magnitudes < 1e-12)

    def test_non_harmonic_map_is_refused(self):
        data = HarmonicData('z*zbar', 2.0, Disk(0j, 0.5))
        with pytest.raises(NotClosedError) as info:
            integrate_cmc(data, [0j, 0.3 + 0.2j])
        assert info.value.residual > 1e-6

    def test_check_closed_returns_worst(self, hyperbolic):
        assert check_closed(hyperbolic, [0j, 0.5 + 0.5j]) < 1e-12


class TestIntegration:

    def test_reduces_to_maxface(self, cmc_enneper):
        np.testing.assert_allclose(integrate_cmc(cmc_enneper, [0j, 1 + 0j]), [-1.0, 4 / 3, 0.0],
                                   atol=1e-12)

    def test_path_independence(self, hyperbolic):
        direct = integrate_cmc(hyperbolic, [0j, 0.6 + 0.3j])
        detour = integrate_cmc(hyperbolic, [0j, -0.2 + 0.5j, 0.6 + 0.3j])
        np.testing.assert_allclose(direct, detour, atol=1e-9)

    def test_zero_length_path(self, hyperbolic):
        np.testing.assert_array_equal(integrate_cmc(hyperbolic, [0.2j, 0.2j]), np.zeros(3))


class TestCurvatures:

    def test_round_sphere_curvature(self, hyperbolic):
        assert gaussian_curvature_E_cmc(hyperbolic, 0j) == pytest.approx(4.0)
        assert gaussian_curvature_L_cmc(hyperbolic, 0j) == pytest.approx(-4.0)

    def test_synthetic_singular_jet(self):
        g = Jet.from_partials(1.0, {(1, 0): 1.0}, order=3)
        data = JetData(g, Jet.constant(1.0), kind='cmc', H=1.0)
        assert gaussian_curvature_E_cmc(data, 0j) == pytest.approx(-1 / 64)

    def test_matches_maxface_on_holomorphic_data(self, cmc_enneper):
        for t in (0.2, 1.0, 2.5):
            assert gaussian_curvature_E_cmc(cmc_enneper, np.exp(1j * t)) == pytest.approx(-1 / 16)

    def test_xi_f_closed_form(self, cmc_enneper):
        z = np.exp(0.3j)
        pj = cmc_enneper.point_jets(z)
        xi = 1j * z
        direct = 2.0 * (xi * tangent_values(pj)).real
        np.testing.assert_allclose(xi_f_closed(pj), direct, atol=1e-12)


class TestButterfly:

    def test_holomorphic_butterfly_data(self):
        data = HarmonicData('z', 2.0, Disk(1 + 0j, 0.5), omega='exp(-i*(z - 1))/z^2')
        report = butterfly_test_cmc(data, 1 + 0j)
        assert report.verdict
        assert report.conditions['butterfly'] == pytest.approx(1.0)
        assert report.conditions['zbar_terms'] == 0.0

    def test_cuspidal_edge_is_not_a_butterfly(self, cmc_enneper):
        assert not butterfly_test_cmc(cmc_enneper, np.exp(0.3j)).verdict

    def test_degenerate(self):
        data = JetData(Jet.constant(1.0), Jet.constant(1.0), kind='cmc', H=2.0)
        with pytest.raises(DegenerateError):
            butterfly_test_cmc(data, 0j)
