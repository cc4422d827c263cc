"""
Expression Parser
Created by Sergie Code

Parses complex expressions in z and zbar into an immutable tree.

Grammar, loosest binding first:

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := primary ('^' ['-'] INTEGER)*
    primary := NUMBER | 'i' | 'z' | 'zbar' | NAME '(' expr ')' | '(' expr ')'

All binary operators associate to the left. Exponents must be integer
literals; general powers are written exp(w*log(z)).
"""

import logging
import re
from dataclasses import dataclass, field

from src.errors import ParseError

logger = logging.getLogger(__name__)

FUNCTIONS = frozenset({'exp', 'log', 'sin', 'cos', 'sinh', 'cosh', 'tanh', 'sqrt'})
UNARY_FUNCTIONS = frozenset({'conj', 're', 'im', 'abs2'})
VARIABLES = frozenset({'z', 'zbar'})

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
""", re.VERBOSE)

_PRIMARY_START = frozenset({'number', 'i', 'z', 'zbar', 'function', '(', '-'})


# Tree nodes. Offsets are excluded from equality so printed-and-reparsed
# trees compare equal.

@dataclass(frozen=True)
class Number:
    value: float
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ImaginaryUnit:
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Variable:
    name: str
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Unary:
    op: str
    operand: object
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Binary:
    op: str
    left: object
    right: object
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Power:
    base: object
    exponent: int
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Call:
    function: str
    argument: object
    offset: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def tokenize(text):
    """Split text into tokens carrying UTF-8 byte offsets."""
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos]!r}",
                             _byte_offset(text, pos), _PRIMARY_START)
        kind = match.lastgroup
        if kind != 'ws':
            tokens.append(Token(kind, match.group(), _byte_offset(text, pos)))
        pos = match.end()
    tokens.append(Token('end', '', _byte_offset(text, len(text))))
    return tokens


def _byte_offset(text, pos):
    return len(text[:pos].encode('utf-8'))


class _Parser:

    def __init__(self, tokens):
        self.tokens = tokens
        self.index = 0

    @property
    def current(self):
        return self.tokens[self.index]

    def advance(self):
        token = self.current
        self.index += 1
        return token

    def expect(self, text):
        token = self.current
        if token.text != text or token.kind == 'end':
            raise ParseError(f"expected {text!r}", token.offset, {text})
        return self.advance()

    def expression(self):
        node = self.term()
        while self.current.text in ('+', '-') and self.current.kind == 'op':
            op = self.advance()
            node = Binary(op.text, node, self.term(), op.offset)
        return node

    def term(self):
        node = self.unary()
        while self.current.text in ('*', '/') and self.current.kind == 'op':
            op = self.advance()
            node = Binary(op.text, node, self.unary(), op.offset)
        return node

    def unary(self):
        if self.current.kind == 'op' and self.current.text == '-':
            op = self.advance()
            return Unary('neg', self.unary(), op.offset)
        return self.power()

    def power(self):
        node = self.primary()
        while self.current.kind == 'op' and self.current.text == '^':
            op = self.advance()
            sign = 1
            if self.current.kind == 'op' and self.current.text == '-':
                self.advance()
                sign = -1
            token = self.current
            if token.kind != 'number' or not token.text.isdigit():
                raise ParseError("exponent must be an integer literal", token.offset, {'integer'})
            self.advance()
            node = Power(node, sign * int(token.text), op.offset)
        return node

    def primary(self):
        token = self.current
        if token.kind == 'number':
            self.advance()
            return Number(float(token.text), token.offset)
        if token.kind == 'name':
            self.advance()
            if token.text == 'i':
                return ImaginaryUnit(token.offset)
            if token.text in VARIABLES:
                return Variable(token.text, token.offset)
            if token.text in FUNCTIONS or token.text in UNARY_FUNCTIONS:
                self.expect('(')
                argument = self.expression()
                self.expect(')')
                if token.text in UNARY_FUNCTIONS:
                    return Unary(token.text, argument, token.offset)
                return Call(token.text, argument, token.offset)
            raise ParseError(f"unknown identifier {token.text!r}", token.offset,
                             VARIABLES | FUNCTIONS | UNARY_FUNCTIONS | {'i'})
        if token.kind == 'op' and token.text == '(':
            self.advance()
            node = self.expression()
            self.expect(')')
            return node
        raise ParseError("expected an operand", token.offset, _PRIMARY_START)


def parse(text):
    """
    Parse expression text into a tree.

    Args:
        text (str): expression source

    Returns:
        node: root of the immutable expression tree

    Raises:
        ParseError: with the byte offset and the set of acceptable tokens
    """
    if not isinstance(text, str):
        raise TypeError("expression text must be a string")
    parser = _Parser(tokenize(text))
    node = parser.expression()
    if parser.current.kind != 'end':
        raise ParseError(f"unexpected token {parser.current.text!r}", parser.current.offset,
                         {'+', '-', '*', '/', '^', 'end of input'})
    logger.debug(f"Parsed expression: {text}")
    return node


def to_text(node):
    """Print a tree back to source; parse(to_text(t)) == t."""
    if isinstance(node, Number):
        return repr(node.value)
    if isinstance(node, ImaginaryUnit):
        return 'i'
    if isinstance(node, Variable):
        return node.name
    if isinstance(node, Unary):
        if node.op == 'neg':
            return f"(-{to_text(node.operand)})"
        return f"{node.op}({to_text(node.operand)})"
    if isinstance(node, Binary):
        return f"({to_text(node.left)} {node.op} {to_text(node.right)})"
    if isinstance(node, Power):
        return f"({to_text(node.base)}^{node.exponent})"
    if isinstance(node, Call):
        return f"{node.function}({to_text(node.argument)})"
    raise TypeError(f"not an expression node: {node!r}")


def walk(node):
    """Yield every node of a tree, parents first."""
    yield node
    if isinstance(node, Unary):
        yield from walk(node.operand)
    elif isinstance(node, Binary):
        yield from walk(node.left)
        yield from walk(node.right)
    elif isinstance(node, Power):
        yield from walk(node.base)
    elif isinstance(node, Call):
        yield from walk(node.argument)
