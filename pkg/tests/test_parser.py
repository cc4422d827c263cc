"""
Test Expression Parser
Created by Sergie Code
"""

import pytest

from src.errors import ParseError
from src.expressions.parser import (Binary, Call, ImaginaryUnit, Number, Power, Unary, Variable,
                                    parse, to_text, walk)


def test_precedence_and_associativity():
    tree = parse('1 - z - 2*z^2')
    assert tree == Binary('-', Binary('-', Number(1.0), Variable('z')),
                          Binary('*', Number(2.0), Power(Variable('z'), 2)))


def test_unary_minus_binds_looser_than_power():
    assert parse('-z^2') == Unary('neg', Power(Variable('z'), 2))


def test_negative_integer_exponent():
    assert parse('z^-2') == Power(Variable('z'), -2)


def test_imaginary_unit_and_calls():
    tree = parse('exp(-i*(z - 1))')
    assert isinstance(tree, Call)
    assert tree.function == 'exp'
    assert any(isinstance(node, ImaginaryUnit) for node in walk(tree))


def test_non_holomorphic_functions_are_unary_nodes():
    tree = parse('conj(z) + abs2(z)')
    assert tree.left == Unary('conj', Variable('z'))
    assert tree.right == Unary('abs2', Variable('z'))


def test_offsets_are_recorded():
    tree = parse('z + zbar')
    assert tree.offset == 2
    assert tree.right.offset == 4


@pytest.mark.parametrize('text', [
    'z',
    'z*zbar/2',
    '-i*exp(-i*(z - 1))/z^2',
    'sqrt(1 + z^2) - log(z)',
    're(z)*im(z)',
])
def test_printed_tree_parses_back(text):
    tree = parse(text)
    assert parse(to_text(tree)) == tree


class TestParseErrors:

    def test_missing_operand(self):
        with pytest.raises(ParseError) as info:
            parse('z + * 2')
        assert info.value.offset == 4

    def test_exponent_must_be_integer(self):
        with pytest.raises(ParseError) as info:
            parse('2^z')
        assert info.value.offset == 2
        assert 'integer' in info.value.expected

    def test_unknown_identifier(self):
        with pytest.raises(ParseError) as info:
            parse('gamma(z)')
        assert info.value.offset == 0
        assert 'z' in info.value.expected

    def test_unexpected_character_byte_offset(self):
        with pytest.raises(ParseError) as info:
            parse('z + é')
        assert info.value.offset == 4

    def test_unbalanced_parenthesis(self):
        with pytest.raises(ParseError) as info:
            parse('(z + 1')
        assert info.value.offset == 6

    def test_trailing_tokens(self):
        with pytest.raises(ParseError):
            parse('z z')

    def test_non_string_input(self):
        with pytest.raises(TypeError):
            parse(3)
