"""Closed-form expressions in ``n`` and ``k`` for principal and auxiliary factors.

The grammar is deliberately small: non-negative integer literals, the
variables ``n`` and ``k``, unary minus (binding tighter than ``*`` and ``/``),
the four binary operators with the usual precedence and left association, and
parentheses. Rationals arise through ``/``.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

import pyparsing as pp

from kernels.exceptions import DivisionByZero, ParseError, UnknownVariable

logger = logging.getLogger(__name__)

ALLOWED_VARIABLES = frozenset({"n", "k"})

pp.ParserElement.enable_packrat()


@dataclass(frozen=True)
class Literal:
    value: int

    def evaluate(self, n: int, k: int) -> Fraction:
        return Fraction(self.value)

    def render(self) -> str:
        return str(self.value)

    def walk(self) -> Iterator["Node"]:
        yield self


@dataclass(frozen=True)
class Variable:
    name: str
    offset: int = field(default=0, compare=False)

    def evaluate(self, n: int, k: int) -> Fraction:
        return Fraction(n if self.name == "n" else k)

    def render(self) -> str:
        return self.name

    def walk(self) -> Iterator["Node"]:
        yield self


@dataclass(frozen=True)
class Negate:
    operand: "Node"

    def evaluate(self, n: int, k: int) -> Fraction:
        return -self.operand.evaluate(n, k)

    def render(self) -> str:
        return f"-{self.operand.render()}"

    def walk(self) -> Iterator["Node"]:
        yield self
        yield from self.operand.walk()


@dataclass(frozen=True)
class BinaryOp:
    op: str
    left: "Node"
    right: "Node"

    def evaluate(self, n: int, k: int) -> Fraction:
        lhs = self.left.evaluate(n, k)
        rhs = self.right.evaluate(n, k)
        if self.op == "+":
            return lhs + rhs
        if self.op == "-":
            return lhs - rhs
        if self.op == "*":
            return lhs * rhs
        if rhs == 0:
            raise DivisionByZero(n, k)
        return lhs / rhs

    def render(self) -> str:
        return f"({self.left.render()}{self.op}{self.right.render()})"

    def walk(self) -> Iterator["Node"]:
        yield self
        yield from self.left.walk()
        yield from self.right.walk()


Node = Literal | Variable | Negate | BinaryOp


@dataclass(frozen=True)
class Expression:
    tree: Node
    source: str = field(default="", compare=False)

    @property
    def variables(self) -> frozenset:
        return frozenset(node.name for node in self.tree.walk() if isinstance(node, Variable))

    def mentions(self, name: str) -> bool:
        return name in self.variables

    def evaluate(self, n: int, k: int = 0) -> Fraction:
        return self.tree.evaluate(n, k)

    def render(self) -> str:
        return self.tree.render()

    def __str__(self) -> str:
        return self.source or self.render()


def _negation(tokens: pp.ParseResults) -> Negate:
    return Negate(tokens[1])


def _left_fold(tokens: pp.ParseResults) -> Node:
    node = tokens[0]
    for index in range(1, len(tokens), 2):
        node = BinaryOp(tokens[index], node, tokens[index + 1])
    return node


def _build_grammar() -> pp.ParserElement:
    integer = pp.Word(pp.nums).set_name("integer")
    integer.set_parse_action(lambda s, loc, toks: Literal(int(toks[0])))

    name = pp.Word(pp.alphas + "_", pp.alphanums + "_").set_name("variable")
    name.set_parse_action(lambda s, loc, toks: Variable(toks[0], offset=loc))

    expression = pp.Forward().set_name("expression")
    operand = pp.Forward()

    # `a - b` is an error stop: once `a` matches, a missing `b` fails at its own offset.
    group = pp.Suppress("(") - (expression + pp.Suppress(")"))
    negation = (pp.Literal("-") - operand).set_parse_action(_negation)
    operand <<= (negation | integer | name | group).set_name("operand")

    product = operand + pp.ZeroOrMore(pp.one_of("* /") - operand)
    product.set_parse_action(_left_fold)
    expression <<= (product + pp.ZeroOrMore(pp.one_of("+ -") - product)).set_parse_action(_left_fold)
    return expression.parse_with_tabs()


_GRAMMAR = _build_grammar()


def _byte_offset(src: str, loc: int) -> int:
    return len(src[:loc].encode("utf-8"))


def parse(src: str) -> Expression:
    try:
        result = _GRAMMAR.parse_string(src, parse_all=True)
    except pp.ParseBaseException as exc:
        raise ParseError(_byte_offset(src, exc.loc), exc.msg, src) from exc

    tree = result[0]
    unknown = sorted(
        (node for node in tree.walk()
         if isinstance(node, Variable) and node.name not in ALLOWED_VARIABLES),
        key=lambda node: node.offset,
    )
    if unknown:
        raise UnknownVariable(unknown[0].name, _byte_offset(src, unknown[0].offset))

    logger.debug("parsed expression %r as %s", src, tree.render())
    return Expression(tree=tree, source=src.strip())


def evaluate(expression: Expression, n: int, k: int = 0) -> Fraction:
    return expression.evaluate(n, k)


def render(expression: Expression) -> str:
    return expression.render()
