"""Module expressions: direct sums of catalog labels with multiplicities.

    expr  := term ('+' term)*
    term  := [INT '*'] atom
    atom  := M(b,g) | M2(g1,g2) | P1xy | Pxy | W(b1,b2) | W1(a) | W2(a)
           | Omega1(n1,n2,n3,n4) | Omega2..Omega5(n1,n2) | Omega6 | Omega7

b in 1,-1,i,-i; g in 1,x,y,xy; a in s2p, s2m (a+1 = +sqrt2 or -sqrt2).
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .yd import (OneDim, Pair1xy, Pairxy, PairGG, W, W1, W2, Omega, simple, realize,
                 direct_sum)

__all__ = ["ModuleExpr", "ExprError", "parse", "to_module", "render_label"]

_TOK = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")
_B = ("1", "-1", "i", "-i")
_G = ("1", "x", "y", "xy")
_OMEGA_ARITY = {1: 4, 2: 2, 3: 2, 4: 2, 5: 2, 6: 0, 7: 0}


class ExprError(ValueError):
    def __init__(self, msg, pos=None, text=None):
        where = f" at column {pos + 1}" if pos is not None else ""
        super().__init__(f"{msg}{where}" + (f" in {text!r}" if text is not None else ""))
        self.pos = pos


@dataclass(frozen=True)
class ModuleExpr:
    terms: tuple      # ((multiplicity, label), ...)

    def render(self):
        return " + ".join(lab.render() if k == 1 else f"{k}*{lab.render()}" for k, lab in self.terms)

    def labels(self):
        return [lab for k, lab in self.terms for _ in range(k)]

    def __str__(self):
        return self.render()


def render_label(lab):
    return lab.render()


class _P:
    def __init__(self, text):
        self.text = text
        self.toks = []
        pos = 0
        while pos < len(text):
            m = _TOK.match(text, pos)
            if m is None or m.end() == pos:
                break
            start = m.start() + len(m.group(0)) - len(m.group(0).lstrip())
            kind = "int" if m.group(1) else "name" if m.group(2) else "op"
            self.toks.append((kind, m.group(1) or m.group(2) or m.group(3), start))
            pos = m.end()
        self.toks.append(("end", "", len(text)))
        self.k = 0

    def peek(self):
        return self.toks[self.k]

    def take(self):
        t = self.toks[self.k]
        self.k += 1
        return t

    def err(self, msg, tok=None):
        tok = tok or self.peek()
        return ExprError(msg, tok[2], self.text)

    def expect(self, op):
        t = self.take()
        if t[:2] != ("op", op):
            raise self.err(f"expected {op!r}", t)

    def scalar(self):
        t = self.take()
        sign = ""
        if t[:2] == ("op", "-"):
            sign = "-"
            t = self.take()
        if t[0] not in ("int", "name"):
            raise self.err("expected a scalar", t)
        return sign + t[1], t

    def args(self):
        if self.peek()[:2] != ("op", "("):
            return [], self.peek()
        open_tok = self.take()
        out = [self.scalar()]
        while self.peek()[:2] == ("op", ","):
            self.take()
            out.append(self.scalar())
        self.expect(")")
        return out, open_tok

    def atom(self):
        t = self.take()
        if t[0] != "name":
            raise self.err("expected a module name", t)
        name = t[1]
        args, at = self.args()
        vals = [a for a, _ in args]

        def arity(n):
            if len(vals) != n:
                raise self.err(f"{name} takes {n} argument{'s' if n != 1 else ''}", t)

        if name == "M":
            arity(2)
            if vals[0] not in _B:
                raise self.err("b must be one of 1,-1,i,-i", args[0][1])
            if vals[1] not in _G:
                raise self.err("g must be one of 1,x,y,xy", args[1][1])
            try:
                return OneDim(vals[0], vals[1])
            except ValueError as e:
                raise self.err(str(e), t) from None
        if name == "M2":
            arity(2)
            for v, tok in args:
                if v not in _G:
                    raise self.err("g must be one of 1,x,y,xy", tok)
            try:
                return PairGG(vals[0], vals[1])
            except ValueError as e:
                raise self.err(str(e), t) from None
        if name in ("P1xy", "Pxy"):
            arity(0)
            return Pair1xy() if name == "P1xy" else Pairxy()
        if name == "W":
            arity(2)
            for v, tok in args:
                if v not in ("1", "-1"):
                    raise self.err("b1, b2 must be 1 or -1", tok)
            return W(int(vals[0]), int(vals[1]))
        if name in ("W1", "W2"):
            arity(1)
            if vals[0] not in ("s2p", "s2m"):
                raise self.err("a must be s2p or s2m", args[0][1])
            br = 1 if vals[0] == "s2p" else -1
            return W1(br) if name == "W1" else W2(br)
        m = re.fullmatch(r"Omega([1-7])", name)
        if m:
            kind = int(m.group(1))
            arity(_OMEGA_ARITY[kind])
            counts = []
            for v, tok in args:
                if not v.isdigit():
                    raise self.err("multiplicities must be non-negative integers", tok)
                counts.append(int(v))
            return Omega(kind, tuple(counts))
        raise self.err(f"unknown module {name!r}", t)

    def term(self):
        t = self.peek()
        k = 1
        if t[0] == "int":
            self.take()
            k = int(t[1])
            self.expect("*")
            if k < 1:
                raise self.err("multiplicity must be positive", t)
        elif t[:2] == ("op", "-"):
            raise self.err("multiplicity must be positive", t)
        return k, self.atom()

    def expr(self):
        terms = [self.term()]
        while self.peek()[:2] == ("op", "+"):
            self.take()
            terms.append(self.term())
        if self.peek()[0] != "end":
            raise self.err(f"unexpected {self.peek()[1]!r}")
        return ModuleExpr(tuple(terms))


def parse(text):
    if not text.strip():
        raise ExprError("empty expression")
    return _P(text).expr()


def to_module(e, basis="w"):
    """The YD module of an expression (catalog sums are realized summand by summand)."""
    if isinstance(e, str):
        e = parse(e)
    mods = []
    for lab in e.labels():
        mods.append(realize(lab, basis) if isinstance(lab, Omega) else simple(lab, basis))
    if len(mods) == 1:
        m = mods[0]
    else:
        m = direct_sum(*mods, name=e.render())
    m.name = e.render()
    return m
