"""Expressions in the generators ``a<k>``, ``y<k>^{+-1}`` with scalar coefficients.

An expression parses to ``{token_tuple: coeff}`` with tokens ``("a", i)`` and
``("y", gamma)``; :func:`to_awords` moves group elements to the right.
"""

from __future__ import annotations

import re

from ..scalars import ONE, Monomial, S, parse_scalar

_TOKEN = re.compile(r"\s*(?:(?P<gen>[ay])(?P<idx>\d+)|(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*^()/]))")


class ExprError(ValueError):
    pass


def _tokens(text: str):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExprError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        pos = m.end()
        if m.group("gen"):
            out.append(("gen", m.group("gen"), int(m.group("idx"))))
        elif m.group("num"):
            out.append(("num", m.group("num")))
        elif m.group("name"):
            out.append(("name", m.group("name")))
        else:
            out.append(("op", m.group("op")))
    return out


def _mul(x: dict, y: dict) -> dict:
    out: dict = {}
    for w1, c1 in x.items():
        for w2, c2 in y.items():
            w = w1 + w2
            v = out.get(w)
            out[w] = c1 * c2 if v is None else v + c1 * c2
    return {k: v for k, v in out.items() if not v.is_zero()}


def _add(x: dict, y: dict, sign=1) -> dict:
    out = dict(x)
    for w, c in y.items():
        v = out.get(w)
        c = c if sign > 0 else -c
        out[w] = c if v is None else v + c
    return {k: v for k, v in out.items() if not v.is_zero()}


class _Parser:
    def __init__(self, text, theta, s, names):
        self.toks = _tokens(text)
        self.i = 0
        self.theta, self.s, self.names = theta, s, names

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        t = self.peek()
        if t is None:
            raise ExprError("unexpected end of expression")
        self.i += 1
        return t

    def is_op(self, op):
        t = self.peek()
        return t is not None and t[0] == "op" and t[1] == op

    def parse(self):
        if not self.toks:
            raise ExprError("empty expression")
        v = self.expr()
        if self.peek() is not None:
            raise ExprError(f"trailing input near token {self.i}")
        return v

    def expr(self):
        v = self.term()
        while self.is_op("+") or self.is_op("-"):
            op = self.take()[1]
            v = _add(v, self.term(), 1 if op == "+" else -1)
        return v

    def term(self):
        v = self.factor()
        while self.is_op("*"):
            self.take()
            v = _mul(v, self.factor())
        return v

    def factor(self):
        if self.is_op("-"):
            self.take()
            return {w: -c for w, c in self.factor().items()}
        base, kind = self.atom()
        if self.is_op("^"):
            self.take()
            n = self.integer()
            if n < 0:
                if kind == "y":
                    (w, c), = base.items()
                    return {(("y", tuple(-x for x in w[0][1])),): c}
                if kind == "scalar":
                    (w, c), = base.items()
                    return {w: c ** n}
                raise ExprError("negative powers are only allowed on y<k> and scalars")
            out = {(): ONE}
            for _ in range(n):
                out = _mul(out, base)
            return out
        return base

    def integer(self) -> int:
        sign = 1
        if self.is_op("-"):
            self.take()
            sign = -1
        if self.is_op("("):
            self.take()
            n = self.integer()
            if not self.is_op(")"):
                raise ExprError("expected )")
            self.take()
            return sign * n
        t = self.take()
        if t[0] != "num" or "/" in t[1]:
            raise ExprError("exponent must be an integer")
        return sign * int(t[1])

    def atom(self):
        t = self.take()
        if t[0] == "gen":
            _, g, k = t
            if g == "a":
                if not 1 <= k <= self.theta:
                    raise ExprError(f"a{k} is out of range")
                return {(("a", k - 1),): ONE}, "a"
            if not 1 <= k <= self.s:
                raise ExprError(f"y{k} is out of range")
            gamma = tuple(int(h == k - 1) for h in range(self.s))
            return {(("y", gamma),): ONE}, "y"
        if t[0] == "num":
            return {(): S(parse_scalar(t[1]))}, "scalar"
        if t[0] == "name":
            try:
                return {(): parse_scalar(t[1], self.names)}, "scalar"
            except ValueError as exc:
                raise ExprError(str(exc)) from exc
        if t[1] == "(":
            v = self.expr()
            if not self.is_op(")"):
                raise ExprError("expected )")
            self.take()
            return v, "group"
        raise ExprError(f"unexpected token {t[1]!r}")


def parse_expression(text: str, theta: int, s: int, names=None) -> dict:
    return _Parser(text, theta, s, list(names) if names else None).parse()


def to_awords(expr: dict, datum) -> dict:
    """``{(a_word, gamma): coeff}`` using ``y a_j = chi_j(y) a_j y``."""
    out: dict = {}
    for toks, c in expr.items():
        gamma = [0] * datum.s
        word = []
        coeff = Monomial(1)
        for kind, val in toks:
            if kind == "y":
                gamma = [a + b for a, b in zip(gamma, val)]
            else:
                if any(gamma):
                    coeff = coeff * datum.chi_on(val, gamma)
                word.append(val)
        key = (tuple(word), tuple(gamma))
        v = out.get(key)
        add = c * S(coeff)
        out[key] = add if v is None else v + add
    return {k: v for k, v in out.items() if not v.is_zero()}
