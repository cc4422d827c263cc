"""
Test Holomorphy Validation
Created by Sergie Code
"""

from src.expressions.domain import Disk
from src.expressions.parser import parse
from src.expressions.validation import structural_violations, validate_holomorphic


def test_holomorphic_data_passes():
    report = validate_holomorphic(parse('z'), parse('1'), Disk(0j, 1.5), grid=16)
    assert report.ok
    assert report.samples > 0
    assert report.omega_zero_count == 0


def test_zbar_is_reported_with_offset():
    violations = structural_violations(parse('z + zbar'))
    assert len(violations) == 1
    assert violations[0].kind == 'zbar'
    assert violations[0].offset == 4


def test_every_non_holomorphic_node_is_listed():
    violations = structural_violations(parse('conj(z) + re(z)*abs2(z)'), source='omega')
    assert [v.kind for v in violations] == ['conj', 're', 'abs2']
    assert all(v.source == 'omega' for v in violations)


def test_modulus_one_identically_is_a_violation():
    report = validate_holomorphic(parse('exp(i*1)'), parse('1'), Disk(0j, 1.0), grid=8)
    assert report.modulus_one_identically
    assert not report.ok


def test_vanishing_omega_is_a_warning():
    report = validate_holomorphic(parse('z'), parse('z'), Disk(0j, 1.0), grid=5)
    assert report.ok
    assert report.omega_zero_count == 1
    assert report.warnings[0].kind == 'omega_zero'


def test_evaluation_failure_is_a_warning():
    report = validate_holomorphic(parse('1/z'), parse('1'), Disk(0j, 1.0), grid=5)
    assert report.ok
    assert report.warnings[0].kind == 'evaluation'


def test_identically_vanishing_omega_is_a_violation():
    report = validate_holomorphic(parse('z'), parse('0'), Disk(0j, 1.0), grid=5)
    assert not report.ok
    assert report.violations[0].kind == 'omega_zero'
    assert report.violations[0].source == 'omega'
    assert not report.warnings


def test_constant_g_is_sampled():
    report = validate_holomorphic(parse('0.5'), parse('1'), Disk(0j, 1.0), grid=5)
    assert report.ok
    assert report.omega_zero_count == 0
