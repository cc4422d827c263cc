"""
Expression evaluation into Wirtinger jets.
Created by Sergie Code

z and zbar are treated as the two independent Wirtinger variables, so an
expression without zbar, conj, re, im or abs2 yields jets whose zbar
partials are exactly zero.
"""

import numpy as np

from src.calculus.wirtinger import MAX_ORDER, Jet, elementary
from src.errors import EvaluationError
from src.expressions.parser import Binary, Call, ImaginaryUnit, Number, Power, Unary, Variable


class _JetEvaluator:

    def __init__(self, z, order):
        self.z = z
        self.order = order

    def visit(self, node):
        try:
            return self._visit(node)
        except EvaluationError as exc:
            if exc.offset is None:
                exc.offset = node.offset
            raise

    def _visit(self, node):
        if isinstance(node, Number):
            return Jet.constant(node.value, self.order)
        if isinstance(node, ImaginaryUnit):
            return Jet.constant(1j, self.order)
        if isinstance(node, Variable):
            if node.name == 'z':
                return Jet.variable(self.z, self.order)
            return Jet.conj_variable(self.z, self.order)
        if isinstance(node, Unary):
            operand = self.visit(node.operand)
            if node.op == 'neg':
                return -operand
            if node.op == 'conj':
                return operand.conjugate()
            if node.op == 're':
                return operand.real()
            if node.op == 'im':
                return operand.imag()
            if node.op == 'abs2':
                return operand.abs2()
        if isinstance(node, Binary):
            left, right = self.visit(node.left), self.visit(node.right)
            if node.op == '+':
                return left + right
            if node.op == '-':
                return left - right
            if node.op == '*':
                return left * right
            if node.op == '/':
                return left / right
        if isinstance(node, Power):
            return self.visit(node.base) ** node.exponent
        if isinstance(node, Call):
            return elementary(node.function, self.visit(node.argument))
        raise TypeError(f"cannot evaluate node {node!r}")


def eval_jet(ast, z, order=MAX_ORDER):
    """
    Evaluate an expression tree to a jet at z.

    Args:
        ast: expression tree from parse()
        z (complex | np.ndarray): evaluation point(s)
        order (int): jet order, at most 3

    Returns:
        Jet: value and Wirtinger partials

    Raises:
        DivisionByZeroError, BranchCutError: with the offset of the failing node
    """
    if not 0 <= order <= MAX_ORDER:
        raise ValueError(f"jet order must be in 0..{MAX_ORDER}, got {order}")
    z = np.asarray(z, dtype=complex)
    if z.ndim == 0:
        z = complex(z)
    return _JetEvaluator(z, order).visit(ast)


def evaluate(ast, z):
    """Evaluate an expression at a point or an array of points."""
    z = np.asarray(z, dtype=complex)
    value = eval_jet(ast, z, order=0).value
    if z.ndim == 0:
        return complex(value)
    return np.broadcast_to(value, z.shape).copy()
