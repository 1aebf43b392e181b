"""Braided vector spaces, quantum symmetrizers and Nichols-algebra graded dimensions.

The graded piece B^n of the Nichols algebra is V^{(x)n} modulo ker S_n, so
dim B^n = rank S_n.  Ranks are computed from the recursion
S_n = (S_{n-1} (x) id) S_{n-1,1} with S_{n-1,1} = id + c_{n-1} + c_{n-1}c_{n-2} + ...:
if the rows of R span the row space of S_{n-1}, the rows of
(R (x) id) S_{n-1,1} span the row space of S_n.  Only covectors are ever
stored, never a d^n x d^n matrix.
"""
from __future__ import annotations

import hashlib
import itertools
import math
import threading
import time
from dataclasses import dataclass, field

from .cyclo import CycloMatrix, Echelon, ONE, ZERO, I, coerce, rank as mat_rank
from .hopf import Report
from .yd import YdModule, braid_between, simple, direct_sum, W1, W2, PairGG, W

__all__ = [
    "BraidedSpace", "braiding", "symmetrizer", "symmetrizer_rank", "graded_dims",
    "GradedProfile", "NicholsConfig", "factorize", "graded_product", "diagonal_form",
    "dynkin", "DynkinData", "gk_estimate", "eigen_probe_w1a", "conjecture_probe",
    "ResourceCap", "braid_hash", "nichols_cache", "ENGINE_VERSION", "verify_braiding",
    "row_spaces", "factor_groups",
]

ENGINE_VERSION = "1.0"


class ResourceCap(RuntimeError):
    pass


class BraidedSpace:
    def __init__(self, c, name="V"):
        n2 = c.nrows
        d = math.isqrt(n2)
        if d * d != n2 or c.ncols != n2:
            raise ValueError("braid matrix must be d^2 x d^2")
        self.c = c
        self.dim = d
        self.name = name
        self.rows = [c.rows.get(t, {}) for t in range(n2)]    # covector action: t -> {t': c[t,t']}
        cols = c.columns()
        self.cols = cols                                      # vector action: t -> {t': c[t',t]}
        self.monomial = all(len(col) == 1 for col in cols)

    def apply_local(self, vec, k, n, covector=False):
        """Apply c at slots k, k+1 (0-based) of length-n words to a vector or covector."""
        d = self.dim
        dd = d * d
        wt = d ** (n - 2 - k)
        ops = self.rows if covector else self.cols
        out = {}
        for w, a in vec.items():
            t = (w // wt) % dd
            base = w - t * wt
            for t2, cf in ops[t].items():
                w2 = base + t2 * wt
                v = out.get(w2)
                nv = a * cf if v is None else v + a * cf
                if nv:
                    out[w2] = nv
                else:
                    del out[w2]
        return out

    def digest(self):
        return braid_hash(self.c)


def braid_hash(c):
    h = hashlib.sha256()
    h.update(f"{c.nrows}x{c.ncols};".encode())
    for i in sorted(c.rows):
        for j in sorted(c.rows[i]):
            h.update(f"{i},{j}:{c.rows[i][j]};".encode())
    return h.hexdigest()


def braiding(m):
    if isinstance(m, BraidedSpace):
        return m
    return BraidedSpace(m.braid_matrix(), m.name)


def verify_braiding(bs):
    """Invertibility and the braid equation on all basis vectors of V^{(x)3}."""
    rep = Report(f"braiding({bs.name})")
    d = bs.dim
    rep.add("invertible", mat_rank(bs.c) == d * d)
    bad = []
    for w in range(d ** 3):
        v = {w: ONE}
        lhs = bs.apply_local(bs.apply_local(bs.apply_local(v, 0, 3), 1, 3), 0, 3)
        rhs = bs.apply_local(bs.apply_local(bs.apply_local(v, 1, 3), 0, 3), 1, 3)
        if lhs != rhs:
            bad.append(w)
    rep.add("braid equation", not bad, str(bad[:3]))
    return rep


# --- symmetrizers -------------------------------------------------------------

def _shuffle_apply(bs, vec, n):
    """S_{n-1,1} on V^{(x)n}: u <- v + c_k u for k = 1..n-1."""
    u = dict(vec)
    for k in range(n - 1):
        cu = bs.apply_local(u, k, n)
        u = dict(vec)
        for w, a in cu.items():
            v = u.get(w)
            nv = a if v is None else v + a
            if nv:
                u[w] = nv
            else:
                del u[w]
    return u


def _sym_apply(bs, vec, m, n):
    """S_m on the first m slots of V^{(x)n}."""
    if m <= 1:
        return dict(vec)
    d = bs.dim
    tail = d ** (n - m)
    # S_m = (S_{m-1} (x) id) S_{m-1,1}; act on the first m slots only
    u = {}
    for w, a in vec.items():
        head, rest = divmod(w, tail)
        for h2, b in _shuffle_apply(bs, {head: a}, m).items():
            key = h2 * tail + rest
            v = u.get(key)
            nv = b if v is None else v + b
            if nv:
                u[key] = nv
            else:
                del u[key]
    return _sym_apply(bs, u, m - 1, n)


def symmetrizer(bs, n, cap=4096):
    """The quantum symmetrizer S_n as an explicit d^n x d^n matrix (materialization capped)."""
    bs = braiding(bs)
    N = bs.dim ** n
    if N > cap:
        raise ResourceCap(f"S_{n} has size {N} > cap {cap}; use graded_dims")
    cols = [_sym_apply(bs, {w: ONE}, n, n) for w in range(N)]
    return CycloMatrix.from_columns(cols, N)


def symmetrizer_rank(bs, n, cap=4096):
    return mat_rank(symmetrizer(bs, n, cap))


def shuffle_symmetrizer(bs, n, cap=4096):
    """S_{n-1,1} as an explicit matrix on V^{(x)n}."""
    bs = braiding(bs)
    N = bs.dim ** n
    if N > cap:
        raise ResourceCap(f"size {N} > cap {cap}")
    return CycloMatrix.from_columns([_shuffle_apply(bs, {w: ONE}, n) for w in range(N)], N)


# --- graded dimensions --------------------------------------------------------

@dataclass
class NicholsConfig:
    cap: int = 4096            # largest d^n handled
    materialize_cap: int = 4096
    time_budget: float | None = None


@dataclass
class GradedProfile:
    dims: list
    cutoff: int
    finite: bool
    provenance: str = "direct"
    seconds: list = field(default_factory=list)
    note: str = ""

    @property
    def total(self):
        return sum(self.dims) if self.finite else None

    def cumulative(self):
        return list(itertools.accumulate(self.dims))

    def hilbert(self):
        return " + ".join(f"{c}t^{n}" if n else str(c) for n, c in enumerate(self.dims) if c)

    def render(self):
        if self.finite:
            return f"{self.total} ({','.join(map(str, self.dims))})"
        return f"open(<={self.cutoff}): {','.join(map(str, self.dims))}"


class _Cache:
    """In-process profile cache keyed by braid digest; access serialized."""

    def __init__(self):
        self.lock = threading.Lock()
        self.store = {}

    def get(self, key, cutoff):
        with self.lock:
            p = self.store.get(key)
        if p is None:
            return None
        if p.finite or p.cutoff >= cutoff:
            dims = p.dims[:cutoff + 1] if not p.finite else p.dims
            finite = p.finite or (len(dims) >= 2 and dims[-1] == 0)
            return GradedProfile(list(dims), min(cutoff, p.cutoff), p.finite and len(p.dims) <= cutoff + 2
                                 or finite, p.provenance, list(p.seconds[:len(dims)]), "cached")
        return None

    def put(self, key, prof):
        with self.lock:
            old = self.store.get(key)
            if old is None or prof.finite or prof.cutoff > old.cutoff:
                self.store[key] = prof

    def clear(self):
        with self.lock:
            self.store.clear()


nichols_cache = _Cache()


def _next_rows(bs, R, n):
    """Row space of S_n from rows R spanning that of S_{n-1}: rows of (R (x) id) S_{n-1,1}."""
    d = bs.dim
    ech = Echelon()
    for r in R:
        for j in range(d):
            u = {w * d + j: a for w, a in r.items()}
            total = dict(u)
            cur = u
            for k in range(n - 2, -1, -1):
                cur = bs.apply_local(cur, k, n, covector=True)
                if not cur:
                    break
                for w, a in cur.items():
                    v = total.get(w)
                    nv = a if v is None else v + a
                    if nv:
                        total[w] = nv
                    else:
                        del total[w]
            if total:
                ech.add(total)
    return ech


def row_spaces(m, cfg=None):
    """Echelon forms of the row spaces of S_0, S_1, ... up to the first zero degree.

    Only for finite Nichols algebras; raises ResourceCap when d^n exceeds the cap.
    """
    cfg = cfg or NicholsConfig()
    bs = braiding(m)
    d = bs.dim
    out = []
    e0 = Echelon()
    e0.add({0: ONE})
    out.append(e0)
    if d == 0:
        return out
    e1 = Echelon()
    for j in range(d):
        e1.add({j: ONE})
    out.append(e1)
    n = 1
    while True:
        n += 1
        if d ** n > cfg.cap:
            raise ResourceCap(f"degree {n} needs d^n = {d ** n} > cap {cfg.cap}")
        ech = _next_rows(bs, list(out[-1].pivots.values()), n)
        if not ech.rank:
            return out
        out.append(ech)


def _direct_profile(bs, cutoff, cfg, on_degree=None):
    d = bs.dim
    dims = [1, d] if cutoff >= 1 else [1]
    secs = [0.0, 0.0][:len(dims)]
    if cutoff < 1 or d == 0:
        return GradedProfile(dims if d else [1], cutoff, True if d == 0 else False, seconds=secs)
    R = [{j: ONE} for j in range(d)]
    finite = False
    t_start = time.time()
    for n in range(2, cutoff + 1):
        if d ** n > cfg.cap:
            raise ResourceCap(f"degree {n} needs d^n = {d ** n} > cap {cfg.cap}")
        t0 = time.time()
        ech = _next_rows(bs, R, n)
        R = list(ech.pivots.values())
        dims.append(len(R))
        secs.append(time.time() - t0)
        if on_degree:
            on_degree(n, len(R))
        if not R:
            finite = True
            break
        if cfg.time_budget is not None and time.time() - t_start > cfg.time_budget:
            raise ResourceCap(f"time budget exhausted after degree {n}")
    if finite:
        # S_n = 0 forces S_{n+1} = (S_n (x) id) S_{n,1} = 0; the zero degree is dropped
        dims.pop()
        secs.pop()
    return GradedProfile(dims, cutoff, finite, "direct", secs)


def _sparse_form(m):
    """Catalog sums in the defining basis are rebuilt in the p-basis, where braidings are monomial."""
    if m.basis != "w" or not all(hasattr(lab, "render") and not isinstance(lab, str) for lab, _, _ in m.parts):
        return m
    if not any(isinstance(lab, (W, W1)) for lab, _, _ in m.parts):
        return m
    mods = [simple(lab, "p") for lab, _, _ in m.parts]
    out = mods[0] if len(mods) == 1 else direct_sum(*mods, name=m.name)
    out.name = m.name
    return out


def graded_dims(obj, cutoff, cfg=None, factor=True, use_cache=True, on_degree=None,
                sparse_basis=True):
    """Graded dimensions of the Nichols algebra up to degree ``cutoff``.

    A direct sum whose summands braid trivially with each other in both orders is
    handled as a tensor product of the pieces (``provenance='factorized'``).
    """
    cfg = cfg or NicholsConfig()
    if sparse_basis and isinstance(obj, YdModule):
        obj = _sparse_form(obj)
    if factor and isinstance(obj, YdModule) and len(obj.parts) > 1:
        groups = factor_groups(obj)
        if len(groups) > 1:
            profs = [graded_dims(g, cutoff, cfg, factor=False, use_cache=use_cache) for g in groups]
            out = profs[0]
            for p in profs[1:]:
                out = graded_product(out, p, cutoff)
            out.provenance = "factorized"
            return out
    bs = braiding(obj)
    key = bs.digest()
    if use_cache:
        hit = nichols_cache.get(key, cutoff)
        if hit is not None:
            return hit
    prof = _direct_profile(bs, cutoff, cfg, on_degree)
    if use_cache:
        nichols_cache.put(key, prof)
    return prof


def _restrict(m, idx):
    vecs = []
    for i in idx:
        v = [ZERO] * m.dim
        v[i] = ONE
        vecs.append(v)
    from .yd import submodule
    sub = submodule(m, vecs, name="part")
    return sub


def _part_modules(m):
    mods = []
    for lab, off, dd in m.parts:
        sub = _restrict(m, list(range(off, off + dd)))
        sub.name = lab.render() if hasattr(lab, "render") else str(lab)
        sub.parts = [(lab, 0, dd)]
        mods.append(sub)
    return mods


def factorize(m1, m2):
    """True when c_{M2,M1} c_{M1,M2} = id on M1 (x) M2 (and then B(M1+M2) = B(M1) (x) B(M2))."""
    c12 = braid_between(m1, m2)
    c21 = braid_between(m2, m1)
    return c21 @ c12 == CycloMatrix.identity(m1.dim * m2.dim)


def factor_groups(m):
    mods = _part_modules(m)
    n = len(mods)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for i in range(n):
        for j in range(i + 1, n):
            if not factorize(mods[i], mods[j]):
                parent[find(i)] = find(j)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(mods[i])
    out = []
    for g in groups.values():
        out.append(g[0] if len(g) == 1 else direct_sum(*g))
    return out


def graded_product(p1, p2, cutoff=None):
    """Convolution of two graded profiles (Hilbert series product)."""
    top = len(p1.dims) + len(p2.dims) - 2
    if cutoff is not None and not (p1.finite and p2.finite):
        top = min(top, cutoff)
    cut = min(p1.cutoff, p2.cutoff) if not (p1.finite and p2.finite) else top
    dims = [0] * (top + 1)
    for a, x in enumerate(p1.dims):
        for b, y in enumerate(p2.dims):
            if a + b <= top:
                dims[a + b] += x * y
    finite = p1.finite and p2.finite
    if not finite:
        # only degrees covered by both truncations are exact
        lim = min(p1.cutoff if not p1.finite else 10 ** 9, p2.cutoff if not p2.finite else 10 ** 9)
        dims = dims[:lim + 1]
        cut = lim
    if finite:
        # a finite total reports the requested cutoff, like the direct path
        cut = top if cutoff is None else max(cutoff, top)
    return GradedProfile(dims, cut, finite, "factorized")


# --- diagonal type and Dynkin diagrams ----------------------------------------

def diagonal_form(m):
    """Matrix (q_ij) with c(e_i (x) e_j) = q_ij e_j (x) e_i, or None when not diagonal."""
    bs = braiding(m)
    d = bs.dim
    q = [[ZERO] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            col = bs.cols[i * d + j]
            if len(col) != 1 or (j * d + i) not in col:
                return None
            q[i][j] = col[j * d + i]
    return q


@dataclass
class DynkinData:
    vertices: list
    edges: dict
    verdict: str          # finite | infinite | not-in-lookup
    components: list
    dimension: int | None
    reason: str = ""

    def render(self):
        vs = ", ".join(f"{k}:{v}" for k, v in enumerate(self.vertices))
        es = ", ".join(f"{a}-{b}:{v}" for (a, b), v in sorted(self.edges.items()))
        return f"vertices [{vs}] edges [{es}] -> {self.verdict}" + (
            f" (dim {self.dimension})" if self.dimension else "")


def dynkin(q):
    """Generalized Dynkin diagram of a diagonal braiding and a small-rank verdict.

    finite: every vertex -1, every edge -1, each component a simple path (type A_k,
    dimension 2^{k(k+1)/2}); infinite: some vertex label 1, or a cycle with all
    labels -1; otherwise not-in-lookup.
    """
    n = len(q)
    verts = [q[i][i] for i in range(n)]
    edges = {}
    for i in range(n):
        for j in range(i + 1, n):
            e = q[i][j] * q[j][i]
            if e != ONE:
                edges[(i, j)] = e
    adj = {i: set() for i in range(n)}
    for (a, b) in edges:
        adj[a].add(b)
        adj[b].add(a)
    seen, comps = set(), []
    for s in range(n):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(sorted(comp))
    if any(v == ONE for v in verts):
        return DynkinData(verts, edges, "infinite", [], None, "a vertex is labelled 1")
    minus = -ONE
    all_minus = all(v == minus for v in verts) and all(e == minus for e in edges.values())
    info = []
    total = 1
    cyclic = False
    pathlike = True
    for comp in comps:
        cedges = [e for e in edges if e[0] in comp]
        if len(cedges) >= len(comp):
            cyclic = True
        if len(cedges) != len(comp) - 1 or any(len(adj[v]) > 2 for v in comp):
            pathlike = False
        k = len(comp)
        info.append((f"A{k}", comp))
        total *= 2 ** (k * (k + 1) // 2)
    if all_minus and cyclic:
        return DynkinData(verts, edges, "infinite", info, None, "a cycle of -1 labels")
    if all_minus and pathlike and all(len(c) <= 4 for c in comps):
        return DynkinData(verts, edges, "finite", info, total, "disjoint union of A-type paths")
    return DynkinData(verts, edges, "not-in-lookup", info, None, "outside the rank<=4 lookup")


# --- growth -------------------------------------------------------------------

def gk_estimate(p):
    """Least-squares slope of log(cumulative dim) against log of the number of layers.

    The cumulative dimension through degree n counts n+1 layers; fitting against
    log(n+1) makes polynomial growth (n+1)^k have slope exactly k.  The fit uses
    the top half of the available degrees.
    """
    if p.finite:
        return 0.0
    cum = p.cumulative()
    N = len(cum) - 1
    if N < 7:
        raise ValueError("need at least 8 degrees")
    lo = max(1, (N + 1) // 2)
    xs = [math.log(n + 1) for n in range(lo, N + 1)]
    ys = [math.log(cum[n]) for n in range(lo, N + 1)]
    mx = sum(xs) / len(xs)
    my = sum(ys) / len(ys)
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    return sxy / sxx


# --- probes -------------------------------------------------------------------

@dataclass
class EigenProbe:
    branch: int
    n: int
    theta: object
    odd_value: object          # formula values
    even_value: object
    odd_measured: object       # None when the image is not a multiple of the vector
    even_measured: object

    @property
    def eigenvectors(self):
        return self.odd_measured is not None and self.even_measured is not None

    @property
    def nonzero(self):
        return self.eigenvectors and bool(self.odd_measured) and bool(self.even_measured)

    @property
    def odd_ok(self):
        return self.odd_measured is not None and self.odd_measured == self.odd_value

    @property
    def even_ok(self):
        return self.even_measured is not None and self.even_measured == self.even_value

    @property
    def ok(self):
        return self.odd_ok and self.even_ok and self.nonzero


def _pure(word, d):
    w = 0
    for a in word:
        w = w * d + a
    return w


def _eigenvalue(bs, word):
    n = len(word)
    key = _pure(word, bs.dim)
    got = _shuffle_apply(bs, {key: ONE}, n)
    if not got:
        return ZERO
    if set(got) != {key}:
        return None
    return got[key]


def eigen_probe_w1a(branch, n):
    """Apply S_{2n-1,1} to (w1 (x) w2)^{(x)n} and S_{2n,1} to (w1 (x) w2)^{(x)n} (x) w1.

    With theta = (i-1)(a+1)/2 the formula values compared against are
    (1+theta)(1-(-theta^2)^n)/(1+theta^2) and
    (1 - theta + (-1)^n theta^{2n+1}(1+theta))/(1+theta^2).
    """
    lab = W1(branch)
    bs = braiding(simple(lab))
    theta = (I - ONE) * (lab.a + ONE) / 2
    den = ONE + theta * theta
    odd = (ONE + theta) * (ONE - (-(theta * theta)) ** n) / den
    even = (ONE - theta + (-ONE) ** n * theta ** (2 * n + 1) * (ONE + theta)) / den
    return EigenProbe(branch, n, theta, odd, even,
                      _eigenvalue(bs, [0, 1] * n), _eigenvalue(bs, [0, 1] * n + [0]))


def conjecture_probe(b1, which, cutoff, cfg=None, on_degree=None):
    """Truncated profile of B(M<(g1,g2)> + W^{b1,-1}) for (g1,g2) = (xy,x) or (y,xy)."""
    g = {"xy,x": ("xy", "x"), "y,xy": ("y", "xy")}[which] if isinstance(which, str) else which
    m = direct_sum(simple(PairGG(*g)), simple(W(b1, -1), "p"))
    return graded_dims(m, cutoff, cfg, factor=False, on_degree=on_degree)
