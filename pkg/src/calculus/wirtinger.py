"""
Wirtinger Jets
Created by Sergie Code

Truncated Taylor tables in the two commuting derivations d/dz and d/dzbar.
A jet of order N stores c[a, b] = (d/dz)^a (d/dzbar)^b f / (a! b!) for
a + b <= N. Coefficients may be numpy arrays, so one jet can carry a whole
grid of points at once.
"""

import logging
from math import factorial

import numpy as np

from config import Config
from src.errors import BranchCutError, DivisionByZeroError, InsufficientJetOrderError

logger = logging.getLogger(__name__)

MAX_ORDER = 3

_SQRT_BINOMIALS = (1.0, 0.5, -0.125, 0.0625)


def _mask(order):
    n = order + 1
    return np.add.outer(np.arange(n), np.arange(n)) <= order


class Jet:
    """
    Value of a complex function together with its Wirtinger partials.

    Args:
        coeffs (np.ndarray): complex array of shape (order+1, order+1, *shape)
        order (int): truncation order, 0..3
    """

    __slots__ = ('coeffs', 'order')
    __array_ufunc__ = None

    def __init__(self, coeffs, order):
        if not 0 <= order <= MAX_ORDER:
            raise ValueError(f"jet order must be in 0..{MAX_ORDER}, got {order}")
        self.coeffs = coeffs
        self.order = order

    # Construction

    @classmethod
    def constant(cls, value, order=MAX_ORDER):
        value = np.asarray(value, dtype=complex)
        coeffs = np.zeros((order + 1, order + 1) + value.shape, dtype=complex)
        coeffs[0, 0] = value
        return cls(coeffs, order)

    @classmethod
    def variable(cls, z, order=MAX_ORDER):
        """Jet of the coordinate z."""
        jet = cls.constant(z, order)
        if order >= 1:
            jet.coeffs[1, 0] = 1.0
        return jet

    @classmethod
    def conj_variable(cls, z, order=MAX_ORDER):
        """Jet of the conjugate coordinate zbar."""
        jet = cls.constant(np.conj(z), order)
        if order >= 1:
            jet.coeffs[0, 1] = 1.0
        return jet

    @classmethod
    def from_partials(cls, value, partials, order=MAX_ORDER):
        """
        Build a jet from explicit partial derivatives.

        Args:
            value (complex): function value
            partials (dict): maps (a, b) to the partial d_z^a d_zbar^b f
            order (int): truncation order

        Returns:
            Jet: missing partials are zero
        """
        jet = cls.constant(value, order)
        for (a, b), partial in partials.items():
            if a + b > order:
                raise InsufficientJetOrderError(f"partial {(a, b)} exceeds jet order {order}")
            jet.coeffs[a, b] = partial / (factorial(a) * factorial(b))
        return jet

    # Access

    @property
    def shape(self):
        return self.coeffs.shape[2:]

    @property
    def value(self):
        return self.coefficient(0, 0)

    def coefficient(self, a, b):
        entry = self.coeffs[a, b]
        return complex(entry) if entry.ndim == 0 else entry

    def partial(self, a, b):
        """Return d_z^a d_zbar^b of the jet at its base point."""
        if a + b > self.order:
            raise InsufficientJetOrderError(f"partial {(a, b)} exceeds jet order {self.order}")
        return self.coefficient(a, b) * (factorial(a) * factorial(b))

    @property
    def partials(self):
        return {(a, b): self.partial(a, b)
                for a in range(self.order + 1) for b in range(self.order + 1 - a)}

    def truncate(self, order):
        if order > self.order:
            raise InsufficientJetOrderError(f"cannot raise jet order {self.order} to {order}")
        if order == self.order:
            return self
        coeffs = self.coeffs[:order + 1, :order + 1].copy()
        coeffs[~_mask(order)] = 0
        return Jet(coeffs, order)

    def _aligned(self, other):
        order = min(self.order, other.order)
        left, right = self.truncate(order), other.truncate(order)
        shape = np.broadcast_shapes(left.shape, right.shape)
        return left._broadcast(shape), right._broadcast(shape), order

    def _broadcast(self, shape):
        if self.shape == shape:
            return self.coeffs
        lead = self.coeffs.shape[:2]
        padded = self.coeffs.reshape(lead + (1,) * (len(shape) - len(self.shape)) + self.shape)
        return np.broadcast_to(padded, lead + shape)

    # Derivations

    def d_z(self):
        """Jet of d f / d z, one order lower."""
        if self.order == 0:
            raise InsufficientJetOrderError("cannot differentiate an order-0 jet")
        n = self.order
        weights = np.arange(1, n + 1).reshape((n, 1) + (1,) * len(self.shape))
        coeffs = self.coeffs[1:, :n] * weights
        coeffs[~_mask(n - 1)] = 0
        return Jet(coeffs, n - 1)

    def d_zbar(self):
        """Jet of d f / d zbar, one order lower."""
        if self.order == 0:
            raise InsufficientJetOrderError("cannot differentiate an order-0 jet")
        n = self.order
        weights = np.arange(1, n + 1).reshape((1, n) + (1,) * len(self.shape))
        coeffs = self.coeffs[:n, 1:] * weights
        coeffs[~_mask(n - 1)] = 0
        return Jet(coeffs, n - 1)

    # Arithmetic

    def conjugate(self):
        """Complex conjugate: swaps the roles of d/dz and d/dzbar."""
        return Jet(np.swapaxes(self.coeffs, 0, 1).conj(), self.order)

    def real(self):
        return (self + self.conjugate()) * 0.5

    def imag(self):
        return (self - self.conjugate()) * -0.5j

    def abs2(self):
        return self * self.conjugate()

    def __neg__(self):
        return Jet(-self.coeffs, self.order)

    def __add__(self, other):
        if isinstance(other, Jet):
            left, right, order = self._aligned(other)
            return Jet(left + right, order)
        coeffs = self.coeffs.astype(complex, copy=True)
        coeffs[0, 0] = coeffs[0, 0] + other
        return Jet(coeffs, self.order)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Jet):
            left, right, order = self._aligned(other)
            return Jet(_convolve(left, right, order), order)
        return Jet(self.coeffs * other, self.order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return self * other.reciprocal()
        if np.any(np.abs(other) < Config.DIVISION_THRESHOLD):
            raise DivisionByZeroError("division by zero")
        return Jet(self.coeffs / other, self.order)

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def __pow__(self, exponent):
        if not isinstance(exponent, (int, np.integer)) or isinstance(exponent, bool):
            raise TypeError("jets only support integer exponents")
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        result = Jet.constant(np.ones(self.shape), self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def reciprocal(self):
        x0 = self.coeffs[0, 0]
        if np.any(np.abs(x0) < Config.DIVISION_THRESHOLD):
            raise DivisionByZeroError("division by zero")
        inverse = 1.0 / x0
        return self.compose([(-1) ** k * inverse ** (k + 1) for k in range(self.order + 1)])

    def compose(self, taylor):
        """
        Apply a scalar function given its Taylor coefficients at the jet value.

        Args:
            taylor (list): F^(k)(x0) / k! for k = 0..order

        Returns:
            Jet: jet of F(self)
        """
        step = Jet(self.coeffs.copy(), self.order)
        step.coeffs[0, 0] = 0
        result = Jet.constant(taylor[self.order], self.order)
        for k in range(self.order - 1, -1, -1):
            result = result * step + taylor[k]
        return result

    def __repr__(self):
        return f"Jet(order={self.order}, value={self.value!r})"


def _convolve(x, y, order):
    """Truncated two-variable Cauchy product; zero coefficients are skipped."""
    n = order + 1
    out = np.zeros(x.shape, dtype=complex)
    for i in range(n):
        for j in range(n - i):
            xij = x[i, j]
            if not np.any(xij):
                continue
            out[i:, j:] += xij * y[:n - i, :n - j]
    out[~_mask(order)] = 0
    return out


def _check_branch_cut(x0, name):
    tol = Config.BRANCH_CUT_TOLERANCE
    on_cut = (np.real(x0) <= 0) & (np.abs(np.imag(x0)) <= tol)
    if np.any(on_cut):
        raise BranchCutError(f"{name} argument on the branch cut")


def _cyclic(values, order):
    return [values[k % len(values)] / factorial(k) for k in range(order + 1)]


def elementary(fn, arg):
    """
    Apply an elementary function to a jet.

    Args:
        fn (str): one of exp, log, sin, cos, sinh, cosh, tanh, sqrt
        arg (Jet): argument

    Returns:
        Jet: exact derivative propagation to the jet order
    """
    x0 = arg.coeffs[0, 0]
    n = arg.order
    if fn == 'exp':
        e = np.exp(x0)
        return arg.compose([e / factorial(k) for k in range(n + 1)])
    if fn == 'log':
        _check_branch_cut(x0, 'log')
        taylor = [np.log(x0)] + [(-1) ** (k + 1) / (k * x0 ** k) for k in range(1, n + 1)]
        return arg.compose(taylor)
    if fn == 'sqrt':
        _check_branch_cut(x0, 'sqrt')
        root = np.sqrt(x0)
        return arg.compose([_SQRT_BINOMIALS[k] * root / x0 ** k for k in range(n + 1)])
    if fn == 'sin':
        s, c = np.sin(x0), np.cos(x0)
        return arg.compose(_cyclic([s, c, -s, -c], n))
    if fn == 'cos':
        s, c = np.sin(x0), np.cos(x0)
        return arg.compose(_cyclic([c, -s, -c, s], n))
    if fn == 'sinh':
        s, c = np.sinh(x0), np.cosh(x0)
        return arg.compose(_cyclic([s, c], n))
    if fn == 'cosh':
        s, c = np.sinh(x0), np.cosh(x0)
        return arg.compose(_cyclic([c, s], n))
    if fn == 'tanh':
        return elementary('sinh', arg) / elementary('cosh', arg)
    raise ValueError(f"unknown elementary function: {fn}")


def jet_arith(op, lhs, rhs=None):
    """Functional form of the jet operators."""
    if op == 'add':
        return lhs + rhs
    if op == 'sub':
        return lhs - rhs
    if op == 'mul':
        return lhs * rhs
    if op == 'div':
        return lhs / rhs
    if op == 'neg':
        return -lhs
    if op == 'conj':
        return lhs.conjugate()
    if op == 'pow_int':
        return lhs ** rhs
    raise ValueError(f"unknown jet operation: {op}")


def _first_difference(f, h):
    return (8.0 * (f(h) - f(-h)) - (f(2 * h) - f(-2 * h))) / (12.0 * h)


def _second_difference(f, h):
    return (16.0 * (f(h) + f(-h)) - (f(2 * h) + f(-2 * h)) - 30.0 * f(0.0)) / (12.0 * h * h)


def fd_oracle(f, z, h=None):
    """
    Finite-difference estimate of the Wirtinger partials up to order 2.

    Uses five-point central stencils along u and v, so the estimates are
    exact for a constant function and carry an O(h^4) truncation error.

    Args:
        f (callable): f(z, zbar) -> complex
        z (complex): evaluation point
        h (float): stencil step, Config.FD_STEP by default

    Returns:
        Jet: order-2 jet of estimated partials
    """
    h = Config.FD_STEP if h is None else h
    if h <= 0:
        raise ValueError("finite-difference step must be positive")
    z = complex(z)

    def at(w):
        return complex(f(w, w.conjugate()))

    def along_u(point):
        return lambda s: at(point + s)

    def along_v(point):
        return lambda s: at(point + 1j * s)

    f_u = _first_difference(along_u(z), h)
    f_v = _first_difference(along_v(z), h)
    f_uu = _second_difference(along_u(z), h)
    f_vv = _second_difference(along_v(z), h)
    f_uv = _first_difference(lambda s: _first_difference(along_v(z + s), h), h)

    partials = {
        (1, 0): (f_u - 1j * f_v) / 2,
        (0, 1): (f_u + 1j * f_v) / 2,
        (2, 0): (f_uu - 2j * f_uv - f_vv) / 4,
        (1, 1): (f_uu + f_vv) / 4,
        (0, 2): (f_uu + 2j * f_uv - f_vv) / 4,
    }
    return Jet.from_partials(at(z), partials, order=2)
