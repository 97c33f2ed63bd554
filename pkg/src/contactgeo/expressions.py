"""Tiny arithmetic expression grammar for fixture files.

Grammar (documented here as the reference for fixture authors)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := atom ('**' unary)?
    atom    := NUMBER | NAME | NAME '(' expr ')' | '(' expr ')'

Names resolve to the chart / parameter variables supplied at evaluation
time ('x y z', 'u v', or 't' depending on context), to the constant 'pi',
or to one of the functions exp, sin, cos, sqrt, log.  Evaluation is
ring-generic: variables may be floats, numpy arrays, or jets.
"""

from __future__ import annotations

import math
import re

import numpy as np

from .errors import ConfigError

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+\.\d*|\.\d+|\d+)(?:[eE][+-]?\d+)?|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>\*\*|[-+*/()]))"
)

_FUNCTIONS = {"exp", "sin", "cos", "sqrt", "log"}


class Node:
    def eval(self, env):
        raise NotImplementedError


class Num(Node):
    def __init__(self, v):
        self.v = float(v)

    def eval(self, env):
        return self.v


class Var(Node):
    def __init__(self, name):
        self.name = name

    def eval(self, env):
        try:
            return env[self.name]
        except KeyError:
            raise ConfigError(f"unknown variable {self.name!r} in expression") from None


class BinOp(Node):
    def __init__(self, op, a, b):
        self.op, self.a, self.b = op, a, b

    def eval(self, env):
        a = self.a.eval(env)
        b = self.b.eval(env)
        if self.op == "+":
            return a + b
        if self.op == "-":
            return a - b
        if self.op == "*":
            return a * b
        if self.op == "/":
            return a / b
        if self.op == "**":
            if isinstance(b, float) and b == int(b):
                b = int(b)
            return a**b
        raise AssertionError(self.op)


class Neg(Node):
    def __init__(self, a):
        self.a = a

    def eval(self, env):
        return -self.a.eval(env)


class Func(Node):
    def __init__(self, name, a):
        self.name, self.a = name, a

    def eval(self, env):
        a = self.a.eval(env)
        if hasattr(a, self.name):
            return getattr(a, self.name)()
        return getattr(np, self.name)(a)


class _Parser:
    def __init__(self, text: str):
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                if text[pos:].strip():
                    raise ConfigError(f"bad token in expression at: {text[pos:]!r}")
                break
            pos = m.end()
            if m.group("num") is not None:
                self.tokens.append(("num", m.group(0).strip()))
            elif m.group("name") is not None:
                self.tokens.append(("name", m.group("name")))
            else:
                self.tokens.append(("op", m.group("op")))
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self, kind=None, val=None):
        k, v = self.peek()
        if kind is not None and k != kind or val is not None and v != val:
            raise ConfigError(f"unexpected token {v!r} in expression")
        self.i += 1
        return v

    def expr(self):
        node = self.term()
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            op = self.take("op")
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek() == ("op", "*") or self.peek() == ("op", "/"):
            op = self.take("op")
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take("op")
            return Neg(self.unary())
        return self.power()

    def power(self):
        node = self.atom()
        if self.peek() == ("op", "**"):
            self.take("op")
            node = BinOp("**", node, self.unary())
        return node

    def atom(self):
        k, v = self.peek()
        if k == "num":
            self.take()
            return Num(v)
        if k == "name":
            self.take()
            if v == "pi":
                return Num(math.pi)
            if v in _FUNCTIONS:
                self.take("op", "(")
                inner = self.expr()
                self.take("op", ")")
                return Func(v, inner)
            return Var(v)
        if (k, v) == ("op", "("):
            self.take()
            inner = self.expr()
            self.take("op", ")")
            return inner
        raise ConfigError(f"unexpected token {v!r} in expression")


def parse(text: str) -> Node:
    """Parse an expression string into an evaluable tree."""
    p = _Parser(text)
    node = p.expr()
    if p.i != len(p.tokens):
        raise ConfigError(f"trailing tokens in expression {text!r}")
    return node
