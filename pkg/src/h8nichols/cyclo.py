"""Exact arithmetic in the cyclotomic field Q(zeta_8) and exact linear algebra over it.

Elements are stored as four integer numerators over one positive common
denominator in the power basis (1, z, z^2, z^3) with z^4 = -1.  The stored
form is canonical (gcd of all five integers is 1), so equality and hashing
are structural.
"""
from __future__ import annotations

import heapq
import re
from fractions import Fraction
from math import gcd

__all__ = [
    "CycloNumber", "ZERO", "ONE", "ZETA", "I", "SQRT2", "SQRT_I",
    "coerce", "parse_number", "CycloMatrix", "Echelon",
    "rank", "kernel_basis", "solve", "DimensionMismatch", "NoSolution",
]


class DimensionMismatch(ValueError):
    pass


class NoSolution(ValueError):
    pass


def _norm(n0, n1, n2, n3, d):
    if d < 0:
        n0, n1, n2, n3, d = -n0, -n1, -n2, -n3, -d
    g = gcd(n0, n1, n2, n3, d)
    if g != 1:
        return n0 // g, n1 // g, n2 // g, n3 // g, d // g
    return n0, n1, n2, n3, d


class CycloNumber:
    __slots__ = ("n0", "n1", "n2", "n3", "d", "_h")

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        fs = [Fraction(c) for c in (c0, c1, c2, c3)]
        d = 1
        for f in fs:
            d = d * f.denominator // gcd(d, f.denominator)
        ns = [f.numerator * (d // f.denominator) for f in fs]
        self.n0, self.n1, self.n2, self.n3, self.d = _norm(*ns, d)
        self._h = None

    @classmethod
    def _raw(cls, n0, n1, n2, n3, d):
        x = object.__new__(cls)
        x.n0, x.n1, x.n2, x.n3, x.d = _norm(n0, n1, n2, n3, d)
        x._h = None
        return x

    # coordinates
    @property
    def coords(self):
        return tuple(Fraction(n, self.d) for n in (self.n0, self.n1, self.n2, self.n3))

    @property
    def c0(self):
        return Fraction(self.n0, self.d)

    @property
    def c1(self):
        return Fraction(self.n1, self.d)

    @property
    def c2(self):
        return Fraction(self.n2, self.d)

    @property
    def c3(self):
        return Fraction(self.n3, self.d)

    def is_zero(self):
        return not (self.n0 or self.n1 or self.n2 or self.n3)

    def is_one(self):
        return self.n0 == 1 and self.d == 1 and not (self.n1 or self.n2 or self.n3)

    def is_rational(self):
        return not (self.n1 or self.n2 or self.n3)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, CycloNumber):
            try:
                other = coerce(other)
            except TypeError:
                return NotImplemented
        return (self.n0 == other.n0 and self.n1 == other.n1 and self.n2 == other.n2
                and self.n3 == other.n3 and self.d == other.d)

    def __hash__(self):
        if self._h is None:
            if self.is_rational():
                self._h = hash(Fraction(self.n0, self.d))
            else:
                self._h = hash((self.n0, self.n1, self.n2, self.n3, self.d))
        return self._h

    # arithmetic
    def __add__(self, o):
        if not isinstance(o, CycloNumber):
            if not isinstance(o, (int, Fraction)):
                return NotImplemented
            o = coerce(o)
        a, b = self.d, o.d
        if a == b:
            return CycloNumber._raw(self.n0 + o.n0, self.n1 + o.n1, self.n2 + o.n2, self.n3 + o.n3, a)
        return CycloNumber._raw(self.n0 * b + o.n0 * a, self.n1 * b + o.n1 * a,
                                self.n2 * b + o.n2 * a, self.n3 * b + o.n3 * a, a * b)

    __radd__ = __add__

    def __neg__(self):
        return CycloNumber._raw(-self.n0, -self.n1, -self.n2, -self.n3, self.d)

    def __sub__(self, o):
        if not isinstance(o, CycloNumber):
            if not isinstance(o, (int, Fraction)):
                return NotImplemented
            o = coerce(o)
        return self + (-o)

    def __rsub__(self, o):
        return coerce(o) - self

    def __mul__(self, o):
        if not isinstance(o, CycloNumber):
            if isinstance(o, int):
                return CycloNumber._raw(self.n0 * o, self.n1 * o, self.n2 * o, self.n3 * o, self.d)
            if not isinstance(o, Fraction):
                return NotImplemented
            o = coerce(o)
        a0, a1, a2, a3 = self.n0, self.n1, self.n2, self.n3
        b0, b1, b2, b3 = o.n0, o.n1, o.n2, o.n3
        return CycloNumber._raw(
            a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
            a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
            a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
            a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
            self.d * o.d)

    __rmul__ = __mul__

    def galois(self, k):
        """Image under the automorphism z -> z^k, k odd."""
        if k % 2 == 0:
            raise ValueError("k must be odd")
        out = [0, 0, 0, 0]
        for j, n in enumerate((self.n0, self.n1, self.n2, self.n3)):
            e = (j * k) % 8
            if e < 4:
                out[e] += n
            else:
                out[e - 4] -= n
        return CycloNumber._raw(*out, self.d)

    def conjugate(self):
        return self.galois(7)

    def norm(self):
        """Field norm down to Q."""
        u = self * self.galois(5)
        v = u * u.galois(3)
        return v.c0

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_8)")
        if self.is_rational():
            return CycloNumber._raw(self.d, 0, 0, 0, self.n0)
        s5 = self.galois(5)
        u = self * s5  # lies in Q(i)
        ub = u.galois(3)
        den = u * ub  # rational
        num = s5 * ub
        return CycloNumber._raw(num.n0 * den.d, num.n1 * den.d, num.n2 * den.d,
                                num.n3 * den.d, num.d * den.n0)

    def __truediv__(self, o):
        if not isinstance(o, CycloNumber):
            if not isinstance(o, (int, Fraction)):
                return NotImplemented
            o = coerce(o)
        return self * o.inverse()

    def __rtruediv__(self, o):
        return coerce(o) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def to_complex(self):
        import cmath
        z = cmath.exp(1j * cmath.pi / 4)
        return sum(float(c) * z ** j for j, c in enumerate(self.coords))

    # text
    def render(self):
        parts = []
        for j, c in enumerate(self.coords):
            if c == 0:
                continue
            mono = ("", "z", "z^2", "z^3")[j]
            mag = abs(c)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"CycloNumber({self.render()!r})"


ZERO = CycloNumber._raw(0, 0, 0, 0, 1)
ONE = CycloNumber._raw(1, 0, 0, 0, 1)
ZETA = CycloNumber._raw(0, 1, 0, 0, 1)
I = CycloNumber._raw(0, 0, 1, 0, 1)
SQRT2 = CycloNumber._raw(0, 1, 0, -1, 1)
SQRT_I = ZETA


def coerce(x):
    if isinstance(x, CycloNumber):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a field element")
    if isinstance(x, int):
        return CycloNumber._raw(x, 0, 0, 0, 1)
    if isinstance(x, Fraction):
        return CycloNumber._raw(x.numerator, 0, 0, 0, x.denominator)
    if isinstance(x, str):
        return parse_number(x)
    raise TypeError(f"cannot interpret {type(x).__name__} as an element of Q(zeta_8)")


_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(sqrt2|sqrti|zeta|z|i)|(\^)|([-+*/()]))")


def parse_number(text):
    """Parse sums/products of rationals and the symbols z (=zeta_8), zeta, i, sqrt2, sqrti."""
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad field literal {text!r} at {pos}")
        pos = m.end()
        if m.group(1):
            toks.append(("num", Fraction(m.group(1))))
        elif m.group(2):
            toks.append(("sym", m.group(2)))
        else:
            toks.append(("op", m.group(3) or m.group(4)))
    toks.append(("end", None))
    k = [0]

    def peek():
        return toks[k[0]]

    def take():
        t = toks[k[0]]
        k[0] += 1
        return t

    def expr():
        v = term()
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            w = term()
            v = v + w if op == "+" else v - w
        return v

    def term():
        v = unary()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            w = unary()
            v = v * w if op == "*" else v / w
        return v

    def unary():
        if peek() == ("op", "-"):
            take()
            return -unary()
        if peek() == ("op", "+"):
            take()
            return unary()
        return power()

    def power():
        v = atom()
        if peek() == ("op", "^"):
            take()
            t = take()
            if t[0] != "num" or t[1].denominator != 1:
                raise ValueError("exponent must be a non-negative integer")
            v = v ** int(t[1])
        return v

    def atom():
        t = take()
        if t[0] == "num":
            return coerce(t[1])
        if t[0] == "sym":
            return {"z": ZETA, "zeta": ZETA, "i": I, "sqrt2": SQRT2, "sqrti": SQRT_I}[t[1]]
        if t == ("op", "("):
            v = expr()
            if take() != ("op", ")"):
                raise ValueError(f"unbalanced parenthesis in {text!r}")
            return v
        raise ValueError(f"unexpected token {t[1]!r} in {text!r}")

    v = expr()
    if peek()[0] != "end":
        raise ValueError(f"trailing input in {text!r}")
    return v


class CycloMatrix:
    """Sparse matrix over Q(zeta_8); rows stored as dicts col -> nonzero entry."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows, ncols, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else {}

    @classmethod
    def from_dense(cls, data):
        data = [list(r) for r in data]
        nr = len(data)
        nc = len(data[0]) if nr else 0
        rows = {}
        for i, r in enumerate(data):
            if len(r) != nc:
                raise DimensionMismatch("ragged matrix")
            d = {j: coerce(v) for j, v in enumerate(r) if coerce(v)}
            if d:
                rows[i] = d
        return cls(nr, nc, rows)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {i: {i: ONE} for i in range(n)})

    @classmethod
    def zeros(cls, nr, nc):
        return cls(nr, nc, {})

    @classmethod
    def from_columns(cls, cols, nrows):
        m = cls(nrows, len(cols), {})
        for j, col in enumerate(cols):
            items = col.items() if isinstance(col, dict) else enumerate(col)
            for i, v in items:
                v = coerce(v)
                if v:
                    m.rows.setdefault(i, {})[j] = v
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.rows.get(i, {}).get(j, ZERO)

    def set(self, i, j, v):
        v = coerce(v)
        if v:
            self.rows.setdefault(i, {})[j] = v
        else:
            r = self.rows.get(i)
            if r and j in r:
                del r[j]
                if not r:
                    del self.rows[i]

    def to_dense(self):
        out = [[ZERO] * self.ncols for _ in range(self.nrows)]
        for i, r in self.rows.items():
            for j, v in r.items():
                out[i][j] = v
        return out

    def column(self, j):
        return {i: r[j] for i, r in self.rows.items() if j in r}

    def columns(self):
        cols = [dict() for _ in range(self.ncols)]
        for i, r in self.rows.items():
            for j, v in r.items():
                cols[j][i] = v
        return cols

    def transpose(self):
        t = CycloMatrix(self.ncols, self.nrows, {})
        for i, r in self.rows.items():
            for j, v in r.items():
                t.rows.setdefault(j, {})[i] = v
        return t

    def copy(self):
        return CycloMatrix(self.nrows, self.ncols, {i: dict(r) for i, r in self.rows.items()})

    def is_zero(self):
        return not self.rows

    def nnz(self):
        return sum(len(r) for r in self.rows.values())

    def __eq__(self, other):
        if not isinstance(other, CycloMatrix):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and self.rows == other.rows

    def __add__(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        out = self.copy()
        for i, r in other.rows.items():
            for j, v in r.items():
                out.set(i, j, out[i, j] + v)
        return out

    def __neg__(self):
        return CycloMatrix(self.nrows, self.ncols,
                           {i: {j: -v for j, v in r.items()} for i, r in self.rows.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        s = coerce(s)
        if not s:
            return CycloMatrix(self.nrows, self.ncols, {})
        return CycloMatrix(self.nrows, self.ncols,
                           {i: {j: s * v for j, v in r.items()} for i, r in self.rows.items()})

    def __rmul__(self, s):
        return self.scale(s)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __matmul__(self, other):
        if isinstance(other, CycloMatrix):
            if self.ncols != other.nrows:
                raise DimensionMismatch(f"{self.shape} @ {other.shape}")
            out = {}
            for i, r in self.rows.items():
                acc = {}
                for k, a in r.items():
                    ok = other.rows.get(k)
                    if not ok:
                        continue
                    for j, b in ok.items():
                        v = acc.get(j)
                        acc[j] = a * b if v is None else v + a * b
                acc = {j: v for j, v in acc.items() if v}
                if acc:
                    out[i] = acc
            return CycloMatrix(self.nrows, other.ncols, out)
        return self.apply(other)

    def apply(self, vec):
        """Matrix times a vector given as dict index -> value or as a list."""
        if isinstance(vec, (list, tuple)):
            if len(vec) != self.ncols:
                raise DimensionMismatch(f"{self.shape} @ vector of length {len(vec)}")
            vec = {j: coerce(v) for j, v in enumerate(vec) if coerce(v)}
        out = {}
        for i, r in self.rows.items():
            acc = ZERO
            for j, a in r.items():
                b = vec.get(j)
                if b is not None:
                    acc = acc + a * b
            if acc:
                out[i] = acc
        return out

    def kron(self, other):
        out = {}
        for i1, r1 in self.rows.items():
            for i2, r2 in other.rows.items():
                row = {}
                for j1, a in r1.items():
                    for j2, b in r2.items():
                        row[j1 * other.ncols + j2] = a * b
                out[i1 * other.nrows + i2] = row
        return CycloMatrix(self.nrows * other.nrows, self.ncols * other.ncols, out)

    def __repr__(self):
        return f"CycloMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


class Echelon:
    """Incremental exact row echelon form.

    Each stored row has leading entry 1 at its pivot column and no entries
    left of it.  ``add`` reduces against the stored rows and keeps the
    residue when it is nonzero.
    """

    def __init__(self, ncols=None):
        self.ncols = ncols
        self.pivots = {}      # pivot column -> row dict
        self.order = []

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, row):
        v = {j: coerce(a) for j, a in row.items() if a}
        heap = [j for j in v if j in self.pivots]
        heapq.heapify(heap)
        seen = set()
        while heap:
            p = heapq.heappop(heap)
            if p in seen:
                continue
            seen.add(p)
            f = v.get(p)
            if f is None:
                continue
            for j, a in self.pivots[p].items():
                cur = v.get(j)
                nv = -(f * a) if cur is None else cur - f * a
                if nv:
                    v[j] = nv
                    if j in self.pivots and j not in seen:
                        heapq.heappush(heap, j)
                else:
                    v.pop(j, None)
        return v

    def add(self, row):
        v = self.reduce(row)
        if not v:
            return False
        p = min(v)
        inv = v[p].inverse()
        if not inv.is_one():
            v = {j: a * inv for j, a in v.items()}
        self.pivots[p] = v
        self.order.append(p)
        return True

    def contains(self, row):
        return not self.reduce(row)

    def rref(self):
        """Back-substitute so that every pivot column is a unit column; returns rows sorted by pivot."""
        cols = sorted(self.pivots)
        for p in reversed(cols):
            row = self.pivots[p]
            for q in cols:
                if q >= p:
                    break
                r = self.pivots[q]
                f = r.get(p)
                if f:
                    for j, a in row.items():
                        nv = r.get(j, ZERO) - f * a
                        if nv:
                            r[j] = nv
                        else:
                            r.pop(j, None)
        return [self.pivots[p] for p in cols]


def rank(m):
    e = Echelon(m.ncols)
    for r in m.rows.values():
        e.add(r)
        if e.rank == min(m.nrows, m.ncols):
            break
    return e.rank


def kernel_basis(m):
    """Basis of {v : m v = 0}, each vector a list of length m.ncols."""
    e = Echelon(m.ncols)
    for r in m.rows.values():
        e.add(r)
    rows = e.rref()
    piv = sorted(e.pivots)
    pset = set(piv)
    basis = []
    for f in range(m.ncols):
        if f in pset:
            continue
        v = [ZERO] * m.ncols
        v[f] = ONE
        for p, r in zip(piv, rows):
            a = r.get(f)
            if a:
                v[p] = -a
        basis.append(v)
    return basis


def solve(m, b):
    """One solution x of m x = b (b a list), raising NoSolution when inconsistent."""
    if len(b) != m.nrows:
        raise DimensionMismatch(f"rhs length {len(b)} for {m.shape}")
    n = m.ncols
    e = Echelon(n + 1)
    for i in range(m.nrows):
        row = dict(m.rows.get(i, {}))
        bi = coerce(b[i])
        if bi:
            row[n] = bi
        if row:
            e.add(row)
    if n in e.pivots:
        raise NoSolution("inconsistent linear system")
    rows = e.rref()
    x = [ZERO] * n
    for p, r in zip(sorted(e.pivots), rows):
        x[p] = r.get(n, ZERO)
    return x
