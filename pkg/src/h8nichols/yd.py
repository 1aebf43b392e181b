"""Yetter-Drinfeld modules over H8: the simple catalog, constructions and morphisms.

Conventions: a module of dimension d carries, for every H8 basis element h_k,
an action matrix A_k (column j is h_k . m_j) and a coaction matrix C_k with
rho(m_j) = sum_k h_k (x) C_k[:, j].  The braiding is
c(v (x) w) = v_(-1) . w (x) v_(0).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .cyclo import (CycloMatrix, ONE, ZERO, I, SQRT2, SQRT_I, coerce, kernel_basis, solve,
                    NoSolution)
from .hopf import Element, HopfMorphism, Report, h8, f_idem, w_element, inverse_morphism

__all__ = [
    "OneDim", "Pair1xy", "Pairxy", "PairGG", "W", "W1", "W2", "Omega",
    "H8Module", "YdModule", "simple", "all_simple_labels", "verify_yd", "direct_sum",
    "realize", "twist", "radford", "hom_space", "is_isomorphic", "decompose",
    "v1_module", "v2_module", "scalar", "scalar_token", "GROUP", "OutsideCatalog",
    "dump_yd", "load_yd",
]

GROUP = {"1": 0, "x": 1, "y": 2, "xy": 3}
_SCAL = {"1": ONE, "-1": -ONE, "i": I, "-i": -I}


def scalar(tok):
    try:
        return _SCAL[str(tok)]
    except KeyError:
        raise ValueError("b must be one of 1,-1,i,-i") from None


def scalar_token(c):
    for k, v in _SCAL.items():
        if v == c:
            return k
    raise ValueError(f"{c} is not a fourth root of unity")


# --- labels ---------------------------------------------------------------

@dataclass(frozen=True)
class OneDim:
    b: str
    g: str

    def __post_init__(self):
        scalar(self.b)
        ok = {("1", "1"), ("-1", "1"), ("1", "xy"), ("-1", "xy"),
              ("i", "x"), ("-i", "x"), ("i", "y"), ("-i", "y")}
        if (self.b, self.g) not in ok:
            raise ValueError(f"M<{self.b},{self.g}> is not a Yetter-Drinfeld pair")

    def render(self):
        return f"M({self.b},{self.g})"


@dataclass(frozen=True)
class Pair1xy:
    def render(self):
        return "P1xy"


@dataclass(frozen=True)
class Pairxy:
    def render(self):
        return "Pxy"


@dataclass(frozen=True)
class PairGG:
    g1: str
    g2: str

    def __post_init__(self):
        if (self.g1, self.g2) not in {("1", "y"), ("x", "1"), ("xy", "x"), ("y", "xy")}:
            raise ValueError(f"({self.g1},{self.g2}) is not one of (1,y),(x,1),(xy,x),(y,xy)")

    def render(self):
        return f"M2({self.g1},{self.g2})"


@dataclass(frozen=True)
class W:
    b1: int
    b2: int

    def __post_init__(self):
        if self.b1 not in (1, -1) or self.b2 not in (1, -1):
            raise ValueError("b1, b2 must be 1 or -1")

    def render(self):
        return f"W({self.b1},{self.b2})"


@dataclass(frozen=True)
class W1:
    branch: int   # a + 1 = branch * sqrt2

    def __post_init__(self):
        if self.branch not in (1, -1):
            raise ValueError("branch must be 1 or -1")

    @property
    def a(self):
        return self.branch * SQRT2 - ONE

    def render(self):
        return f"W1({'s2p' if self.branch == 1 else 's2m'})"


@dataclass(frozen=True)
class W2(W1):
    def render(self):
        return f"W2({'s2p' if self.branch == 1 else 's2m'})"


@dataclass(frozen=True)
class Omega:
    kind: int
    counts: tuple = ()

    def __post_init__(self):
        need = {1: 4, 2: 2, 3: 2, 4: 2, 5: 2, 6: 0, 7: 0}
        if self.kind not in need:
            raise ValueError("Omega kind must be 1..7")
        if len(self.counts) != need[self.kind]:
            raise ValueError(f"Omega{self.kind} takes {need[self.kind]} multiplicities")
        if any(n < 0 for n in self.counts):
            raise ValueError("multiplicities must be non-negative")

    def summands(self):
        n = self.counts
        if self.kind == 1:
            base = [OneDim("i", "x"), OneDim("-i", "x"), OneDim("i", "y"), OneDim("-i", "y")]
            return [lab for lab, k in zip(base, n) for _ in range(k)]
        if self.kind == 2:
            return [OneDim("i", "x")] * n[0] + [OneDim("-i", "x")] * n[1] + [PairGG("xy", "x")]
        if self.kind == 3:
            return [OneDim("i", "y")] * n[0] + [OneDim("-i", "y")] * n[1] + [PairGG("y", "xy")]
        if self.kind == 4:
            return [OneDim("i", "x")] * n[0] + [OneDim("i", "y")] * n[1] + [W(1, -1)]
        if self.kind == 5:
            return [OneDim("-i", "x")] * n[0] + [OneDim("-i", "y")] * n[1] + [W(-1, -1)]
        if self.kind == 6:
            return [PairGG("xy", "x"), PairGG("y", "xy")]
        return [W(1, -1), W(-1, -1)]

    def render(self):
        if self.counts:
            return f"Omega{self.kind}({','.join(str(c) for c in self.counts)})"
        return f"Omega{self.kind}"


def all_simple_labels():
    out = [OneDim(b, g) for b, g in [("1", "1"), ("-1", "1"), ("1", "xy"), ("-1", "xy"),
                                     ("i", "x"), ("-i", "x"), ("i", "y"), ("-i", "y")]]
    out += [Pair1xy(), Pairxy()]
    out += [PairGG(*g) for g in [("1", "y"), ("x", "1"), ("xy", "x"), ("y", "xy")]]
    out += [W(b1, b2) for b1 in (1, -1) for b2 in (1, -1)]
    out += [W1(1), W1(-1), W2(1), W2(-1)]
    return out


# --- modules --------------------------------------------------------------

def _dense(rows):
    return CycloMatrix.from_dense(rows)


def _action_from_generators(X, Y, Z):
    d = X.nrows
    Id = CycloMatrix.identity(d)
    acts = []
    for k in range(8):
        a, b, e = k & 1, (k >> 1) & 1, k >> 2
        m = Id
        if a:
            m = m @ X
        if b:
            m = m @ Y
        if e:
            m = m @ Z
        acts.append(m)
    return acts


class H8Module:
    """Left H8-module given by the action matrices of all basis elements."""

    def __init__(self, act, name="V"):
        self.act = act
        self.dim = act[0].nrows
        self.name = name

    @classmethod
    def from_generators(cls, X, Y, Z, name="V"):
        return cls(_action_from_generators(_dense(X), _dense(Y), _dense(Z)), name)

    def act_vec(self, h, vec):
        """Action of an H8 vector (dict basis -> coef) on a vector (dict)."""
        out = {}
        for k, c in h.items():
            for i, a in self.act[k].apply(vec).items():
                v = out.get(i, ZERO) + c * a
                if v:
                    out[i] = v
                else:
                    out.pop(i, None)
        return out

    def verify(self):
        H = h8()
        rep = Report(f"H8-module {self.name}")
        rep.add("unit acts as identity", self.act[0] == CycloMatrix.identity(self.dim))
        bad = []
        for i in range(8):
            for j in range(8):
                lhs = self.act[i] @ self.act[j]
                rhs = CycloMatrix.zeros(self.dim, self.dim)
                for k, c in H.product(i, j).items():
                    rhs = rhs + self.act[k].scale(c)
                if lhs != rhs:
                    bad.append((H.labels[i], H.labels[j]))
        rep.add("action is multiplicative", not bad, str(bad[:3]))
        return rep


def v1_module(b):
    b = coerce(b) if not isinstance(b, str) else scalar(b)
    return H8Module.from_generators([[b * b]], [[b * b]], [[b]], f"V1({scalar_token(b)})")


def v2_module():
    return H8Module.from_generators([[0, 1], [1, 0]], [[0, -1], [-1, 0]], [[1, 0], [0, -1]], "V2")


class YdModule:
    def __init__(self, act, coact, name="M", label=None, parts=None, basis="w"):
        self.act = act
        self.coact = coact
        self.dim = act[0].nrows
        self.name = name
        self.label = label
        self.basis = basis
        self.parts = parts if parts is not None else [(label if label is not None else name, 0, self.dim)]
        self._braid = None

    @classmethod
    def build(cls, X, Y, Z, rho, **kw):
        """rho: list over basis vectors j of lists of (H8 Element, l, coef) meaning h (x) coef*m_l."""
        acts = _action_from_generators(_dense(X), _dense(Y), _dense(Z))
        d = acts[0].nrows
        coact = [CycloMatrix.zeros(d, d) for _ in range(8)]
        for j, terms in enumerate(rho):
            for h, l, c in terms:
                for k, a in h.v.items():
                    coact[k].set(l, j, coact[k][l, j] + coerce(c) * a)
        return cls(acts, coact, **kw)

    def coaction(self, j):
        """rho(m_j) as dict (h index, l) -> coef."""
        out = {}
        for k in range(8):
            for l, v in self.coact[k].column(j).items():
                out[(k, l)] = v
        return out

    def rebase(self, P, basis):
        """Same module in the basis given by the columns of P."""
        cols = P.columns()
        d = self.dim
        Pinv_cols = []
        for k in range(d):
            e = [ZERO] * d
            e[k] = ONE
            Pinv_cols.append(solve(P, e))
        Pinv = CycloMatrix.from_columns(Pinv_cols, d)
        act = [Pinv @ A @ P for A in self.act]
        coact = [Pinv @ C @ P for C in self.coact]
        del cols
        return YdModule(act, coact, self.name, self.label, list(self.parts), basis)

    def braid_matrix(self):
        if self._braid is None:
            self._braid = braid_between(self, self)
        return self._braid

    def __repr__(self):
        return f"YdModule({self.name}, dim={self.dim}, basis={self.basis})"


def braid_between(A, B):
    """Matrix of c_{A,B}: A (x) B -> B (x) A; index of a_i (x) b_j is i*dB + j."""
    dA, dB = A.dim, B.dim
    out = CycloMatrix(dB * dA, dA * dB, {})
    for k in range(8):
        Ck = A.coact[k]
        Ak = B.act[k]
        if Ck.is_zero() or Ak.is_zero():
            continue
        ccols = Ck.columns()
        acols = Ak.columns()
        for i in range(dA):
            ci = ccols[i]
            if not ci:
                continue
            for j in range(dB):
                aj = acols[j]
                for r, a in aj.items():
                    for l, c in ci.items():
                        row, col = r * dA + l, i * dB + j
                        out.set(row, col, out[row, col] + a * c)
    return out


def simple(label, basis="w"):
    """The simple Yetter-Drinfeld module for a catalog label.

    basis='w' gives the defining basis; basis='p' gives the basis in which the
    x- and y-actions are diagonal (W^{b1,b2}) or z is diagonal (W1, W2).
    """
    H = h8()
    one, x, y, z = H.one(), H.el("x"), H.el("y"), H.el("z")
    xy = x * y
    half = ONE / 2
    name = label.render()
    if isinstance(label, OneDim):
        b = scalar(label.b)
        g = H.el(label.g) if label.g != "1" else one
        return YdModule.build([[b * b]], [[b * b]], [[b]], [[(g, 0, 1)]], name=name, label=label)
    if isinstance(label, Pair1xy):
        return YdModule.build([[-1, 0], [0, -1]], [[-1, 0], [0, -1]], [[0, I], [I, 0]],
                              [[(one, 0, 1)], [(xy, 1, 1)]], name=name, label=label)
    if isinstance(label, Pairxy):
        return YdModule.build([[1, 0], [0, 1]], [[1, 0], [0, 1]], [[0, 1], [1, 0]],
                              [[(x, 0, 1)], [(y, 1, 1)]], name=name, label=label)
    if isinstance(label, PairGG):
        g1 = H.el(label.g1) if label.g1 != "1" else one
        g2 = H.el(label.g2) if label.g2 != "1" else one
        return YdModule.build([[1, 0], [0, -1]], [[-1, 0], [0, 1]], [[0, 1], [1, 0]],
                              [[(g1, 0, 1)], [(g2, 1, 1)]], name=name, label=label)
    if isinstance(label, W):
        b1, b2 = coerce(label.b1), coerce(label.b2)
        c = (ONE - I * b1) * b2 / 2
        X = [[0, -I * b1], [I * b1, 0]]
        rho = [[((one + y) * z * half, 0, 1), ((one - y) * z * half, 1, 1)],
               [(x * (one + y) * z * half, 1, 1), (x * (one - y) * z * half, 0, 1)]]
        m = YdModule.build(X, X, [[c, c], [-c, c]], rho, name=name, label=label)
        if basis == "p":
            m = m.rebase(_dense([[1, 1], [I * b1, -I * b1]]), "p")
        return m
    if isinstance(label, W1):
        a1 = label.a + 1
        w = w_element()
        sz = [[0, (ONE + I) * a1 / 2], [(ONE - I) * a1 / 2, 0]]
        if isinstance(label, W2):
            X, Y = [[1, 0], [0, -1]], [[-1, 0], [0, 1]]
        else:
            X, Y = [[-1, 0], [0, 1]], [[1, 0], [0, -1]]
        rho = [[((x + y) * w * half, 0, 1), ((x - y) * w * (SQRT_I / 2), 1, 1)],
               [((one + xy) * w * half, 1, 1), ((one - xy) * w * (SQRT_I / 2), 0, 1)]]
        m = YdModule.build(X, Y, sz, rho, name=name, label=label)
        if basis == "p":
            if isinstance(label, W2):
                r = SQRT_I.inverse()
                P = [[1, 1], [r, -r]]
            else:
                P = [[SQRT_I, -SQRT_I], [1, 1]]
            m = m.rebase(_dense(P), "p")
        return m
    raise TypeError(f"not a simple label: {label!r}")


# --- verification -----------------------------------------------------------

def _mat_combo(mats, coeffs, d):
    out = CycloMatrix.zeros(d, d)
    for k, c in coeffs.items():
        out = out + mats[k].scale(c)
    return out


def verify_yd(m):
    H = h8()
    d = m.dim
    rep = Report(f"verify_yd({m.name})")
    Id = CycloMatrix.identity(d)
    rep.add("unit acts as identity", m.act[0] == Id)
    bad = []
    for i in range(8):
        for j in range(8):
            if m.act[i] @ m.act[j] != _mat_combo(m.act, H.product(i, j), d):
                bad.append((H.labels[i], H.labels[j]))
    rep.add("module associativity", not bad, str(bad[:3]))
    # comodule: sum_k Delta(h_k)[a,b] C_k == C_b C_a ; counit: sum eps(h_k) C_k = id
    bad = []
    for a in range(8):
        for b in range(8):
            lhs = CycloMatrix.zeros(d, d)
            for k in range(8):
                c = H.comult[k].get((a, b))
                if c:
                    lhs = lhs + m.coact[k].scale(c)
            if lhs != m.coact[b] @ m.coact[a]:
                bad.append((H.labels[a], H.labels[b]))
    rep.add("comodule coassociativity", not bad, str(bad[:3]))
    rep.add("comodule counit", _mat_combo(m.coact, {k: H.counit[k] for k in range(8)}, d) == Id)
    # compatibility: rho(h.m) = h1 m_(-1) S(h3) (x) h2.m_(0)
    bad = []
    for hk in range(8):
        lhs = [m.coact[k] @ m.act[hk] for k in range(8)]
        rhs = [CycloMatrix.zeros(d, d) for _ in range(8)]
        for (a, b, c), coef in H.iterated_coproduct(hk).items():
            Sc = H.antipode[c]
            for kp in range(8):
                if m.coact[kp].is_zero():
                    continue
                elt = H.mul(H.mul({a: ONE}, {kp: ONE}), Sc)
                if not elt:
                    continue
                block = m.act[b] @ m.coact[kp]
                for k, e in elt.items():
                    rhs[k] = rhs[k] + block.scale(coef * e)
        if lhs != rhs:
            bad.append(H.labels[hk])
    rep.add("Yetter-Drinfeld compatibility", not bad, str(bad[:3]))
    return rep


# --- constructions ------------------------------------------------------------

def _block_diag(mats):
    n = sum(M.nrows for M in mats)
    out = CycloMatrix(n, n, {})
    off = 0
    for M in mats:
        for i, r in M.rows.items():
            out.rows[i + off] = {j + off: v for j, v in r.items()}
        off += M.nrows
    return out


def direct_sum(*mods, name=None):
    act = [_block_diag([m.act[k] for m in mods]) for k in range(8)]
    coact = [_block_diag([m.coact[k] for m in mods]) for k in range(8)]
    parts = []
    off = 0
    for m in mods:
        for lab, o, dd in m.parts:
            parts.append((lab, off + o, dd))
        off += m.dim
    basis = mods[0].basis if all(m.basis == mods[0].basis for m in mods) else "mixed"
    return YdModule(act, coact, name or " + ".join(m.name for m in mods), None, parts, basis)


def realize(spec, basis="w"):
    """Direct sum realizing an Omega specification (summands in listed order)."""
    mods = [simple(lab, basis) for lab in spec.summands()]
    return direct_sum(*mods, name=spec.render())


def twist(m, phi):
    """m^phi: h acts as phi(h), coaction (phi^{-1} (x) id) rho.  phi is an H8 automorphism."""
    inv = inverse_morphism(phi)
    d = m.dim
    act = [_mat_combo(m.act, phi.images[k], d) for k in range(8)]
    coact = [CycloMatrix.zeros(d, d) for _ in range(8)]
    for k in range(8):
        for kp, c in inv.images[k].items():
            coact[kp] = coact[kp] + m.coact[k].scale(c)
    return YdModule(act, coact, f"{m.name}^{phi.name}", None, None, m.basis)


def radford(L):
    """L (x) H8 with h.(l (x) g) = h2.l (x) h1 g S(h3) and rho(l (x) h) = h1 (x) (l (x) h2).

    Basis vector l_i (x) h_k has index 8*i + k.
    """
    H = h8()
    dL = L.dim
    d = 8 * dL
    act = []
    for hk in range(8):
        M = CycloMatrix(d, d, {})
        for (a, b, c), coef in H.iterated_coproduct(hk).items():
            Ab = L.act[b]
            Sc = H.antipode[c]
            for g in range(8):
                left = H.mul(H.mul({a: ONE}, {g: ONE}), Sc)
                for i in range(dL):
                    for r, av in Ab.column(i).items():
                        for k, e in left.items():
                            row, col = 8 * r + k, 8 * i + g
                            M.set(row, col, M[row, col] + coef * av * e)
        act.append(M)
    coact = [CycloMatrix(d, d, {}) for _ in range(8)]
    for g in range(8):
        for (l, r), c in H.comult[g].items():
            for i in range(dL):
                coact[l].set(8 * i + r, 8 * i + g, coact[l][8 * i + r, 8 * i + g] + c)
    return YdModule(act, coact, f"radford({L.name})", None, None, "radford")


def submodule(m, vectors, name="N"):
    """Restriction to the span of the given independent vectors (lists), which must be stable."""
    P = CycloMatrix.from_columns(vectors, m.dim)
    k = len(vectors)

    def restrict(A):
        cols = []
        for j in range(k):
            img = A.apply(vectors[j])
            rhs = [img.get(i, ZERO) for i in range(m.dim)]
            try:
                cols.append(solve(P, rhs))
            except NoSolution:
                raise ValueError("span is not stable") from None
        return CycloMatrix.from_columns(cols, k)

    return YdModule([restrict(A) for A in m.act], [restrict(C) for C in m.coact], name, None, None,
                    "sub")


def hom_space(A, B):
    """Basis of Hom_YD(A, B) as dB x dA matrices."""
    dA, dB = A.dim, B.dim
    n = dA * dB
    rows = {}
    r = 0
    pairs = [(A.act[k], B.act[k]) for k in (1, 2, 4)] + [(A.coact[k], B.coact[k]) for k in range(8)]
    for MA, MB in pairs:
        # (T MA - MB T)[i, j] = sum_s T[i,s] MA[s,j] - sum_s MB[i,s] T[s,j]
        for i in range(dB):
            for j in range(dA):
                row = {}
                for s, v in MA.column(j).items():
                    row[i * dA + s] = row.get(i * dA + s, ZERO) + v
                for s, v in MB.rows.get(i, {}).items():
                    idx = s * dA + j
                    row[idx] = row.get(idx, ZERO) - v
                row = {q: v for q, v in row.items() if v}
                if row:
                    rows[r] = row
                    r += 1
    sysm = CycloMatrix(r, n, rows)
    out = []
    for vec in kernel_basis(sysm):
        T = CycloMatrix(dB, dA, {})
        for q, v in enumerate(vec):
            if v:
                T.set(q // dA, q % dA, v)
        out.append(T)
    return out


def is_isomorphic(A, B):
    if A.dim != B.dim:
        return False
    hs = hom_space(A, B)
    if not hs:
        return False
    from .cyclo import rank
    # a generic combination of a basis is invertible iff some combination is; try a few
    for coeffs in ([1] * len(hs), list(range(1, len(hs) + 1))):
        T = CycloMatrix.zeros(B.dim, A.dim)
        for c, M in zip(coeffs, hs):
            T = T + M.scale(c)
        if rank(T) == A.dim:
            return True
    return False


class OutsideCatalog(ValueError):
    pass


def decompose(m, labels=None):
    """Multiplicities of simple summands, computed from Hom dimensions.

    Over the full catalog the multiplicities must account for all of dim m.
    """
    out = {}
    total = 0
    for lab in labels or all_simple_labels():
        S = simple(lab)
        k = len(hom_space(S, m))
        if k:
            out[lab] = k
            total += k * S.dim
    if labels is None and total != m.dim:
        raise OutsideCatalog(f"module outside catalog: simples account for {total} of {m.dim}")
    return out


def _mat_json(M):
    return [[i, j, str(v)] for i, row in sorted(M.rows.items()) for j, v in sorted(row.items())]


def dump_yd(m):
    """Serialize actions and coactions (nonzero entries, field elements as text)."""
    import json
    return json.dumps({"name": m.name, "dim": m.dim, "basis": m.basis,
                       "act": [_mat_json(A) for A in m.act],
                       "coact": [_mat_json(C) for C in m.coact]}, indent=1)


def load_yd(text):
    import json
    from .cyclo import parse_number
    doc = json.loads(text)
    d = doc["dim"]

    def mat(entries):
        M = CycloMatrix(d, d, {})
        for i, j, v in entries:
            M.set(i, j, parse_number(v))
        return M

    return YdModule([mat(e) for e in doc["act"]], [mat(e) for e in doc["coact"]], doc["name"],
                    basis=doc.get("basis", "w"))
