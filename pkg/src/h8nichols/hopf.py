"""Finite-dimensional Hopf algebras by structure constants, and the 8-dimensional algebra H8.

H8 has basis 1, x, y, xy, z, xz, yz, xyz (index a + 2b + 4e for x^a y^b z^e) with
x^2 = y^2 = 1, xy = yx, zx = yz, zy = xz, z^2 = (1 + x + y - xy)/2.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

from .cyclo import CycloMatrix, CycloNumber, ONE, ZERO, I, SQRT_I, coerce, parse_number

__all__ = [
    "HopfAlgebra", "Element", "Report", "HopfMorphism", "build_h8", "h8", "verify_hopf",
    "idempotents", "f_idem", "w_element", "automorphisms", "automorphism_from_images",
    "character", "character_as_printed", "is_algebra_map", "dump_hopf", "load_hopf",
    "H8_LABELS", "vec_add", "vec_scale", "vec_sub",
]

H8_LABELS = ["1", "x", "y", "xy", "z", "xz", "yz", "xyz"]


# sparse vectors: dict index -> CycloNumber

def vec_add(u, v, s=ONE):
    out = dict(u)
    for k, a in v.items():
        nv = out.get(k, ZERO) + s * a
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def vec_scale(u, s):
    s = coerce(s)
    if not s:
        return {}
    return {k: s * a for k, a in u.items()}


def vec_sub(u, v):
    return vec_add(u, v, -ONE)


def _accum(out, k, a):
    nv = out.get(k)
    nv = a if nv is None else nv + a
    if nv:
        out[k] = nv
    else:
        out.pop(k, None)


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class Report:
    subject: str
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def add(self, name, ok, detail=""):
        self.checks.append(Check(name, bool(ok), detail))

    def failures(self):
        return [c for c in self.checks if not c.ok]

    def summary(self):
        lines = [f"{self.subject}: {'ok' if self.ok else 'FAILED'}"]
        for c in self.checks:
            lines.append(f"  {'ok ' if c.ok else 'BAD'} {c.name}{(': ' + c.detail) if c.detail else ''}")
        return "\n".join(lines)


class HopfAlgebra:
    """Hopf algebra given by structure constants on a basis.

    ``product(i, j)`` returns the product of basis elements as a sparse vector.
    ``generators`` (optional) lists sparse vectors generating the algebra, and
    ``factorization[k]`` a tuple of generator indices whose ordered product is
    basis element k; these let verification avoid the cubic associativity scan.
    """

    def __init__(self, labels, product, unit, comult, counit, antipode,
                 generators=None, factorization=None, name="H"):
        self.labels = list(labels)
        self.dim = len(self.labels)
        self._product = product
        self._cache = {}
        self.unit = unit
        self.comult = comult          # list of dict (l, r) -> coef
        self.counit = counit          # list of CycloNumber
        self.antipode = antipode      # list of sparse vectors
        self.generators = generators
        self.factorization = factorization
        self.name = name
        self._index = {lab: k for k, lab in enumerate(self.labels)}

    def index(self, label):
        return self._index[label]

    def product(self, i, j):
        key = (i, j)
        r = self._cache.get(key)
        if r is None:
            r = self._product(i, j)
            self._cache[key] = r
        return r

    def mul(self, u, v):
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                ab = a * b
                for k, c in self.product(i, j).items():
                    _accum(out, k, ab * c)
        return out

    def basis_vec(self, k):
        return {k: ONE}

    def el(self, spec):
        if isinstance(spec, str):
            return Element(self, {self._index[spec]: ONE})
        if isinstance(spec, int):
            return Element(self, {spec: ONE})
        return Element(self, dict(spec))

    def one(self):
        return Element(self, {self.unit: ONE})

    def delta_vec(self, u):
        out = {}
        for i, a in u.items():
            for lr, c in self.comult[i].items():
                _accum(out, lr, a * c)
        return out

    def eps_vec(self, u):
        acc = ZERO
        for i, a in u.items():
            acc = acc + a * self.counit[i]
        return acc

    def S_vec(self, u):
        out = {}
        for i, a in u.items():
            for k, c in self.antipode[i].items():
                _accum(out, k, a * c)
        return out

    def tensor_mul(self, s, t):
        out = {}
        for (a1, a2), c in s.items():
            for (b1, b2), d in t.items():
                cd = c * d
                left = self.product(a1, b1)
                right = self.product(a2, b2)
                for k, e in left.items():
                    ce = cd * e
                    for l, f in right.items():
                        _accum(out, (k, l), ce * f)
        return out

    def iterated_coproduct(self, i):
        """Delta^(2) of a basis element: dict (a, b, c) -> coef."""
        out = {}
        for (l, r), c in self.comult[i].items():
            for (a, b), d in self.comult[l].items():
                _accum(out, (a, b, r), c * d)
        return out

    def __repr__(self):
        return f"HopfAlgebra({self.name}, dim={self.dim})"


class Element:
    """Algebra element with operator syntax; used to write formulas readably."""

    __slots__ = ("alg", "v")

    def __init__(self, alg, v):
        self.alg = alg
        self.v = {k: coerce(a) for k, a in v.items() if coerce(a)}

    def _lift(self, o):
        if isinstance(o, Element):
            return o
        return Element(self.alg, {self.alg.unit: coerce(o)})

    def __add__(self, o):
        return Element(self.alg, vec_add(self.v, self._lift(o).v))

    __radd__ = __add__

    def __sub__(self, o):
        return Element(self.alg, vec_sub(self.v, self._lift(o).v))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __neg__(self):
        return Element(self.alg, vec_scale(self.v, -ONE))

    def __mul__(self, o):
        if isinstance(o, Element):
            return Element(self.alg, self.alg.mul(self.v, o.v))
        return Element(self.alg, vec_scale(self.v, coerce(o)))

    def __rmul__(self, o):
        return Element(self.alg, vec_scale(self.v, coerce(o)))

    def __truediv__(self, o):
        return self * coerce(o).inverse()

    def __pow__(self, k):
        out = self.alg.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, o):
        if isinstance(o, Element):
            return self.v == o.v
        return self.v == self._lift(o).v

    def __hash__(self):
        return hash(frozenset(self.v.items()))

    def delta(self):
        return self.alg.delta_vec(self.v)

    def S(self):
        return Element(self.alg, self.alg.S_vec(self.v))

    def eps(self):
        return self.alg.eps_vec(self.v)

    def coords(self):
        return [self.v.get(k, ZERO) for k in range(self.alg.dim)]

    def __repr__(self):
        if not self.v:
            return "0"
        terms = []
        for k in sorted(self.v):
            terms.append(f"({self.v[k]})*{self.alg.labels[k]}")
        return " + ".join(terms)


# --- H8 -----------------------------------------------------------------

def _gidx(a, b):
    return a + 2 * b


def _h8_product(i, j):
    a1, b1, e1 = i & 1, (i >> 1) & 1, i >> 2
    a2, b2, e2 = j & 1, (j >> 1) & 1, j >> 2
    if e1:
        a2, b2 = b2, a2
    a, b = a1 ^ a2, b1 ^ b2
    e = e1 + e2
    if e < 2:
        return {_gidx(a, b) + 4 * e: ONE}
    half = CycloNumber(1, 0, 0, 0) / 2
    out = {}
    for (c, d), s in (((0, 0), half), ((1, 0), half), ((0, 1), half), ((1, 1), -half)):
        out[_gidx(a ^ c, b ^ d)] = s
    return out


def _h8_comult(i):
    a, b, e = i & 1, (i >> 1) & 1, i >> 2
    g = _gidx(a, b)
    if not e:
        return {(g, g): ONE}
    half = ONE / 2
    gy = _gidx(a, b ^ 1)
    gx = _gidx(a ^ 1, b)
    # (g (x) g) * 1/2 [z(x)z + yz(x)z + z(x)xz - yz(x)xz]
    return {(g + 4, g + 4): half, (gy + 4, g + 4): half,
            (g + 4, gx + 4): half, (gy + 4, gx + 4): -half}


def _h8_antipode(i):
    a, b, e = i & 1, (i >> 1) & 1, i >> 2
    if e:
        return {_gidx(b, a) + 4: ONE}
    return {i: ONE}


def build_h8():
    prod = {(i, j): _h8_product(i, j) for i in range(8) for j in range(8)}
    h = HopfAlgebra(H8_LABELS, lambda i, j: prod[(i, j)], 0,
                    [_h8_comult(i) for i in range(8)], [ONE] * 8,
                    [_h8_antipode(i) for i in range(8)],
                    generators=[{1: ONE}, {2: ONE}, {4: ONE}],
                    factorization=[tuple([0] * a + [1] * b + [2] * e)
                                   for i in range(8)
                                   for a, b, e in [(i & 1, (i >> 1) & 1, i >> 2)]],
                    name="H8")
    return h


_H8 = None


def h8():
    """Shared H8 instance."""
    global _H8
    if _H8 is None:
        _H8 = build_h8()
    return _H8


def f_idem(j, k):
    H = h8()
    x, y = H.el("x"), H.el("y")
    sj = 1 if j % 2 == 0 else -1
    sk = 1 if k % 2 == 0 else -1
    return (H.one() + sj * x) * (H.one() + sk * y) / 4


def idempotents():
    H = h8()
    one, x, y, z = H.one(), H.el("x"), H.el("y"), H.el("z")
    xy = x * y
    return {
        "e1": (one + x) * (one + y) * (one + z) / 8,
        "e2": (one + x) * (one + y) * (one - z) / 8,
        "e3": (one - x) * (one - y) * (one + I * z) / 8,
        "e4": (one - x) * (one - y) * (one - I * z) / 8,
        "e5": (one - xy) / 2,
        "e5p": (one - xy) * (one + z) / 4,
        "e5pp": (one - xy) * (one - z) / 4,
    }


def w_element():
    """The alternative generator w with w^2 = 1 and w x = y w."""
    H = h8()
    return (f_idem(0, 0) + SQRT_I * f_idem(1, 0) + SQRT_I.inverse() * f_idem(0, 1)
            + I * f_idem(1, 1)) * H.el("z")


# --- verification -------------------------------------------------------

def _first(items, limit=3):
    items = list(items)
    s = ", ".join(str(t) for t in items[:limit])
    return s + (" ..." if len(items) > limit else "")


def _generated_span(h):
    """Indices of basis elements whose factorization reproduces them exactly."""
    bad = []
    for k, word in enumerate(h.factorization):
        v = {h.unit: ONE}
        for g in word:
            v = h.mul(v, h.generators[g])
        if v != {k: ONE}:
            bad.append(h.labels[k])
    return bad


def verify_hopf(h, exhaustive=None):
    """Check all Hopf axioms; returns a Report.

    Exhaustive mode scans all basis pairs/triples.  Otherwise algebra-level
    identities are checked on (basis, generator) pairs, which is complete once
    the recorded factorizations show that the generators generate.
    """
    rep = Report(f"verify_hopf({h.name})")
    d = h.dim
    if exhaustive is None:
        exhaustive = d <= 16 or h.generators is None
    B = range(d)
    e1 = {h.unit: ONE}
    # unit
    bad = [h.labels[b] for b in B if h.mul(e1, {b: ONE}) != {b: ONE} or h.mul({b: ONE}, e1) != {b: ONE}]
    rep.add("unit", not bad, _first(bad))
    if exhaustive:
        rights = [{j: ONE} for j in B]
        pairs = [(a, b) for a in B for b in B]
    else:
        bad = _generated_span(h)
        rep.add("generation", not bad, _first(bad))
        rights = h.generators
        pairs = None
    bad = []
    for a in B:
        for b in B:
            ab = h.product(a, b)
            for ci, c in enumerate(rights):
                if h.mul(ab, c) != h.mul({a: ONE}, h.mul({b: ONE}, c)):
                    bad.append((h.labels[a], h.labels[b], ci))
                    break
            if len(bad) > 3:
                break
        if len(bad) > 3:
            break
    rep.add("associativity", not bad, _first(bad))
    # coassociativity and counit on every basis element
    bad_co, bad_cu = [], []
    for a in B:
        dl = h.comult[a]
        left, right = {}, {}
        for (l, r), c in dl.items():
            for (l1, l2), c2 in h.comult[l].items():
                _accum(left, (l1, l2, r), c * c2)
            for (r1, r2), c2 in h.comult[r].items():
                _accum(right, (l, r1, r2), c * c2)
        if left != right:
            bad_co.append(h.labels[a])
        el_, er_ = {}, {}
        for (l, r), c in dl.items():
            _accum(el_, r, c * h.counit[l])
            _accum(er_, l, c * h.counit[r])
        if el_ != {a: ONE} or er_ != {a: ONE}:
            bad_cu.append(h.labels[a])
    rep.add("coassociativity", not bad_co, _first(bad_co))
    rep.add("counit", not bad_cu, _first(bad_cu))
    # multiplicativity of Delta and epsilon
    bad_d, bad_e = [], []
    gens = rights
    unit_ok = h.comult[h.unit] == {(h.unit, h.unit): ONE} and h.counit[h.unit] == ONE
    for a in B:
        da = h.comult[a]
        for ci, c in enumerate(gens):
            ac = h.mul({a: ONE}, c)
            if h.delta_vec(ac) != h.tensor_mul(da, h.delta_vec(c)):
                bad_d.append((h.labels[a], ci))
            if h.eps_vec(ac) != h.counit[a] * h.eps_vec(c):
                bad_e.append((h.labels[a], ci))
        if len(bad_d) > 3:
            break
    rep.add("comultiplication is an algebra map", unit_ok and not bad_d, _first(bad_d))
    rep.add("counit is an algebra map", not bad_e, _first(bad_e))
    # antipode on every basis element
    bad = []
    for a in B:
        lhs1, lhs2 = {}, {}
        for (l, r), c in h.comult[a].items():
            for k, v in h.mul(h.antipode[l], {r: ONE}).items():
                _accum(lhs1, k, c * v)
            for k, v in h.mul({l: ONE}, h.antipode[r]).items():
                _accum(lhs2, k, c * v)
        target = {h.unit: h.counit[a]} if h.counit[a] else {}
        if lhs1 != target or lhs2 != target:
            bad.append(h.labels[a])
    rep.add("antipode", not bad, _first(bad))
    return rep


# --- morphisms, automorphisms, characters ------------------------------

@dataclass
class HopfMorphism:
    source: HopfAlgebra
    target: HopfAlgebra
    images: list      # sparse vectors in target, one per source basis element
    name: str = "phi"

    def apply(self, u):
        out = {}
        for i, a in u.items():
            for k, c in self.images[i].items():
                _accum(out, k, a * c)
        return out

    def matrix(self):
        return CycloMatrix.from_columns(self.images, self.target.dim)

    def verify(self):
        s, t = self.source, self.target
        rep = Report(f"morphism {self.name}")
        rep.add("unital", self.images[s.unit] == {t.unit: ONE})
        bad = []
        for i in range(s.dim):
            for j in range(s.dim):
                if self.apply(s.product(i, j)) != t.mul(self.images[i], self.images[j]):
                    bad.append((s.labels[i], s.labels[j]))
        rep.add("multiplicative", not bad, _first(bad))
        bad = []
        for i in range(s.dim):
            lhs = t.delta_vec(self.images[i])
            rhs = {}
            for (l, r), c in s.comult[i].items():
                for k1, a in self.images[l].items():
                    for k2, b in self.images[r].items():
                        _accum(rhs, (k1, k2), c * a * b)
            if lhs != rhs:
                bad.append(s.labels[i])
        rep.add("comultiplicative", not bad, _first(bad))
        bad = [s.labels[i] for i in range(s.dim) if t.eps_vec(self.images[i]) != s.counit[i]]
        rep.add("counital", not bad, _first(bad))
        return rep

    def compose(self, other):
        """self after other."""
        return HopfMorphism(other.source, self.target, [self.apply(v) for v in other.images],
                            f"{self.name}*{other.name}")


class ExtensionError(ValueError):
    pass


def automorphism_from_images(images, name="tau", check=True):
    """Extend generator images {'x': Element, 'y': ..., 'z': ...} to H8 -> H8."""
    H = h8()
    X, Y, Z = (images[g] if isinstance(images[g], Element) else parse_h8(images[g])
               for g in ("x", "y", "z"))
    cols = []
    for i in range(8):
        a, b, e = i & 1, (i >> 1) & 1, i >> 2
        v = H.one()
        if a:
            v = v * X
        if b:
            v = v * Y
        if e:
            v = v * Z
        cols.append(v.v)
    phi = HopfMorphism(H, H, cols, name)
    if check:
        rep = phi.verify()
        if not rep.ok:
            raise ExtensionError(f"images do not define a Hopf map: {rep.failures()[0].name}")
    return phi


def automorphisms():
    """The four Hopf automorphisms tau1..tau4 (a Klein four-group)."""
    H = h8()
    x, y, z = H.el("x"), H.el("y"), H.el("z")
    xz, yz, xyz = x * z, y * z, x * y * z
    spec = {
        "tau1": {"x": x, "y": y, "z": z},
        "tau2": {"x": x, "y": y, "z": xyz},
        "tau3": {"x": y, "y": x, "z": (z + xz + yz - xyz) / 2},
        "tau4": {"x": y, "y": x, "z": (-z + xz + yz + xyz) / 2},
    }
    return {k: automorphism_from_images(v, k) for k, v in spec.items()}


def inverse_morphism(phi):
    m = phi.matrix()
    from .cyclo import solve
    cols = []
    for k in range(phi.source.dim):
        e = [ZERO] * phi.target.dim
        e[k] = ONE
        x = solve(m, e)
        cols.append({i: a for i, a in enumerate(x) if a})
    return HopfMorphism(phi.target, phi.source, cols, phi.name + "^-1")


def character(b):
    """Algebra map H8 -> K acting as on the one-dimensional module with x, y -> b^2, z -> b."""
    b = coerce(b)
    if b ** 4 != ONE:
        raise ValueError("b must satisfy b^4 = 1")
    out = []
    for i in range(8):
        a, bb, e = i & 1, (i >> 1) & 1, i >> 2
        out.append((b * b) ** (a + bb) * b ** e)
    return out


def character_as_printed(b):
    """The functional 1,xy -> 1; x,y -> b; z,xyz -> b^2; xz,yz -> b^3, value by value."""
    b = coerce(b)
    vals = {"1": ONE, "xy": ONE, "x": b, "y": b, "z": b ** 2, "xyz": b ** 2, "xz": b ** 3, "yz": b ** 3}
    return [vals[lab] for lab in H8_LABELS]


def is_algebra_map(values, h=None):
    h = h or h8()
    if values[h.unit] != ONE:
        return False
    for i in range(h.dim):
        for j in range(h.dim):
            lhs = ZERO
            for k, c in h.product(i, j).items():
                lhs = lhs + c * values[k]
            if lhs != values[i] * values[j]:
                return False
    return True


# --- text formats ---------------------------------------------------------

def parse_h8(text):
    """Parse an H8 element such as '1/2*(z + x*z + y*z - x*y*z)'."""
    from .poly import parse_poly
    H = h8()
    poly = parse_poly(text, {"x", "y", "z"})
    out = H.el({})
    for word, c in poly.items():
        v = H.one()
        for g in word:
            v = v * H.el(g)
        out = out + c * v
    return out


def _vec_json(v):
    return [[k, str(c)] for k, c in sorted(v.items())]


def dump_hopf(h):
    """Serialize a Hopf algebra to a JSON document (field elements as text)."""
    doc = {
        "name": h.name,
        "basis": h.labels,
        "unit": h.unit,
        "mult": [[i, j, _vec_json(h.product(i, j))] for i in range(h.dim) for j in range(h.dim)
                 if h.product(i, j)],
        "comult": [[[l, r, str(c)] for (l, r), c in sorted(h.comult[i].items())] for i in range(h.dim)],
        "counit": [str(c) for c in h.counit],
        "antipode": [_vec_json(v) for v in h.antipode],
    }
    return json.dumps(doc, indent=1)


def load_hopf(text):
    doc = json.loads(text)
    prod = {}
    for i, j, v in doc["mult"]:
        prod[(i, j)] = {k: parse_number(c) for k, c in v}
    comult = [{(l, r): parse_number(c) for l, r, c in row} for row in doc["comult"]]
    return HopfAlgebra(doc["basis"], lambda i, j: prod.get((i, j), {}), doc["unit"], comult,
                       [parse_number(c) for c in doc["counit"]],
                       [{k: parse_number(c) for k, c in v} for v in doc["antipode"]],
                       name=doc.get("name", "H"))
