"""
Test Expression Evaluation
Created by Sergie Code
"""

import cmath

import numpy as np
import pytest

from src.calculus.wirtinger import fd_oracle
from src.errors import BranchCutError, DivisionByZeroError
from src.expressions.evaluator import eval_jet, evaluate
from src.expressions.parser import parse

CORPUS = [
    'z',
    '2*z',
    'i/z^2',
    'exp(-i*(z - 1))/z^2',
    '-i*exp(-i*(z - 1))/z^2',
    'z*zbar',
    'zbar/2',
    'sin(z)*cosh(zbar) + sqrt(z + 3)',
]


def test_scalar_evaluation():
    assert evaluate(parse('z*zbar'), 1 + 1j) == pytest.approx(2.0)
    assert evaluate(parse('i*i'), 0j) == pytest.approx(-1.0)


def test_array_evaluation_keeps_shape():
    points = np.array([[0.5, 1j], [2.0, -1 + 1j]])
    values = evaluate(parse('z^2'), points)
    assert values.shape == (2, 2)
    np.testing.assert_allclose(values, points ** 2)


def test_constant_broadcasts_over_array():
    values = evaluate(parse('1'), np.array([0j, 1j, 2j]))
    np.testing.assert_array_equal(values, np.ones(3, dtype=complex))


def test_holomorphic_expression_has_no_zbar_partials():
    jet = eval_jet(parse('exp(-i*(z - 1))/z^2'), 1.2 + 0.1j)
    assert jet.partial(0, 1) == 0
    assert jet.partial(1, 1) == 0


def test_division_error_carries_operator_offset():
    with pytest.raises(DivisionByZeroError) as info:
        eval_jet(parse('1/(z - 1)'), 1 + 0j)
    assert info.value.offset == 1


def test_branch_cut_carries_call_offset():
    with pytest.raises(BranchCutError) as info:
        eval_jet(parse('2*log(z)'), -1 + 0j)
    assert info.value.offset == 2


def test_order_out_of_range():
    with pytest.raises(ValueError):
        eval_jet(parse('z'), 0j, order=4)


@pytest.mark.parametrize('text', CORPUS)
def test_autodiff_matches_finite_differences(text):
    tree = parse(text)
    rng = np.random.default_rng(7)
    for _ in range(100):
        point = complex(rng.uniform(0.6, 1.4), rng.uniform(-0.4, 0.4))
        exact = eval_jet(tree, point, order=2)
        estimate = fd_oracle(lambda z, zbar: evaluate(tree, z), point)
        for key, value in exact.partials.items():
            assert abs(estimate.partial(*key) - value) <= 1e-6 * max(1.0, abs(value))


def test_evaluate_matches_cmath():
    value = evaluate(parse('exp(-i*(z - 1))/z^2'), 1.1 + 0.2j)
    z = 1.1 + 0.2j
    assert value == pytest.approx(cmath.exp(-1j * (z - 1)) / z ** 2)
