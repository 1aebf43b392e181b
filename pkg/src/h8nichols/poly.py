"""Noncommutative polynomials over Q(zeta_8) written as text.

Grammar: sums of products of factors; a factor is a generator name, a field
scalar (integers, p/q, i, zeta, sqrt2, sqrti) or a parenthesised polynomial,
optionally raised to ^k.  Products may be written with '*' or juxtaposition
separated by whitespace.  Tensor expressions join two products with '|'.
Result: dict word (tuple of generator names) -> CycloNumber.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .cyclo import ONE, ZETA, I, SQRT2, SQRT_I, coerce

__all__ = ["parse_poly", "parse_tensor", "poly_mul", "poly_add", "render_poly"]

_SCALARS = {"i": I, "zeta": ZETA, "sqrt2": SQRT2, "sqrti": SQRT_I}
_TOK = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def poly_add(p, q, s=ONE):
    out = dict(p)
    for w, c in q.items():
        v = out.get(w)
        v = s * c if v is None else v + s * c
        if v:
            out[w] = v
        else:
            out.pop(w, None)
    return out


def poly_mul(p, q):
    out = {}
    for w1, c1 in p.items():
        for w2, c2 in q.items():
            w = w1 + w2
            v = out.get(w)
            v = c1 * c2 if v is None else v + c1 * c2
            if v:
                out[w] = v
            else:
                out.pop(w, None)
    return out


def _tokens(text):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOK.match(text, pos)
        if not m:
            break
        pos = m.end()
        if m.group(1):
            toks.append(("num", int(m.group(1))))
        elif m.group(2):
            toks.append(("name", m.group(2)))
        elif m.group(3):
            toks.append(("op", m.group(3)))
    toks.append(("end", None))
    return toks


class _Parser:
    def __init__(self, text, names):
        self.text = text
        self.names = set(names)
        self.toks = _tokens(text)
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self):
        t = self.toks[self.k]
        self.k += 1
        return t

    def expect(self, op):
        t = self.take()
        if t != ("op", op):
            raise ValueError(f"expected {op!r} in {self.text!r}, got {t[1]!r}")

    def sum(self):
        sign = ONE
        if self.peek() in (("op", "-"), ("op", "+")):
            sign = -ONE if self.take()[1] == "-" else ONE
        p = {w: sign * c for w, c in self.product().items()}
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            p = poly_add(p, self.product(), ONE if op == "+" else -ONE)
        return p

    def _starts_factor(self, t):
        return t[0] in ("num", "name") or t == ("op", "(")

    def product(self):
        p = self.power()
        while True:
            t = self.peek()
            if t == ("op", "*"):
                self.take()
                p = poly_mul(p, self.power())
            elif t == ("op", "/"):
                self.take()
                q = self.power()
                if len(q) != 1 or () not in q:
                    raise ValueError(f"can only divide by scalars in {self.text!r}")
                inv = q[()].inverse()
                p = {w: c * inv for w, c in p.items()}
            elif self._starts_factor(t):
                p = poly_mul(p, self.power())
            else:
                return p

    def power(self):
        p = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            t = self.take()
            if t[0] != "num":
                raise ValueError(f"bad exponent in {self.text!r}")
            out = {(): ONE}
            for _ in range(t[1]):
                out = poly_mul(out, p)
            p = out
        return p

    def atom(self):
        t = self.take()
        if t[0] == "num":
            return {(): coerce(t[1])}
        if t[0] == "name":
            if t[1] in self.names:
                return {(t[1],): ONE}
            if t[1] in _SCALARS:
                return {(): _SCALARS[t[1]]}
            raise ValueError(f"unknown symbol {t[1]!r} in {self.text!r}")
        if t == ("op", "("):
            p = self.sum()
            self.expect(")")
            return p
        if t == ("op", "-"):
            return {w: -c for w, c in self.power().items()}
        raise ValueError(f"unexpected {t[1]!r} in {self.text!r}")


def parse_poly(text, names):
    ps = _Parser(text, names)
    p = ps.sum()
    if ps.peek()[0] != "end":
        raise ValueError(f"trailing input {ps.peek()[1]!r} in {text!r}")
    return p


def parse_tensor(text, names):
    """Parse 'A | B + C | D - ...' where A..D are products; returns dict (w1, w2) -> coef."""
    ps = _Parser(text, names)
    out = {}
    sign = ONE
    first = True
    while True:
        t = ps.peek()
        if t in (("op", "+"), ("op", "-")):
            sign = ONE if ps.take()[1] == "+" else -ONE
        elif not first:
            break
        first = False
        left = ps.product()
        ps.expect("|")
        right = ps.product()
        for w1, c1 in left.items():
            for w2, c2 in right.items():
                key = (w1, w2)
                v = out.get(key)
                v = sign * c1 * c2 if v is None else v + sign * c1 * c2
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        sign = ONE
        if ps.peek()[0] == "end":
            break
    return out


def render_poly(p):
    if not p:
        return "0"
    terms = []
    for w in sorted(p, key=lambda w: (len(w), w)):
        c = p[w]
        mono = "*".join(w)
        if not mono:
            terms.append(f"({c})")
        elif c == ONE:
            terms.append(mono)
        else:
            terms.append(f"({c})*{mono}")
    return " + ".join(terms)
