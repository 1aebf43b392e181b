"""Bosonizations, truncated smash products and lifted Hopf algebras over H8.

Every algebra here is spanned by terms (w, h): a word w in the module letters
followed by an H8 basis element h.  Three kinds of rules bring products into
that shape:

* H8 relations, applied through the structure constants of H8;
* commutation rules g l = sum c l' h' for g in {x, y, z}, which move H8 to
  the right past a letter;
* word rules L -> R, where every term of R is a shorter word, or a pure word
  of the same length that is lexicographically smaller (letters are ordered
  as listed).

Each reduction step lowers the word in the length-then-lex order, so
reduction terminates.  Confluence is certified by resolving every ambiguity:
H8 products against commutation rules, commutation rules against the first
letter of each word rule, and overlaps between word rules.  Once certified,
normal words times the 8 elements of H8 form a basis.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .cyclo import CycloMatrix, ONE, ZERO, I, coerce, parse_number, rank as mat_rank
from .hopf import (HopfAlgebra, Report, h8, verify_hopf, automorphisms, H8_LABELS,
                   _h8_antipode)
from .poly import parse_poly, parse_tensor
from .yd import YdModule, direct_sum, submodule, hom_space, twist, realize, simple, Omega
from .nichols import (braiding, factorize, graded_dims, row_spaces, NicholsConfig, ResourceCap,
                      _part_modules, _sparse_form, _sym_apply)

__all__ = [
    "PresentedAlgebra", "SmashTruncation", "LiftingParams", "NonConfluent", "DegreeOverflow",
    "PresentationError", "InfiniteNichols", "bosonize", "smash_truncated", "check_identity",
    "build_lifting", "preset_text", "parse_presentation", "hopf_verify_lifting", "iso_check", "induced_maps",
    "FAMILIES",
]

_H = h8()
_HP = [[_H.product(i, j) for j in range(8)] for i in range(8)]
_GENS = {"x": 1, "y": 2, "z": 4}
_GEN_NAMES = {1: "x", 2: "y", 4: "z"}
_HS = [_h8_antipode(i) for i in range(8)]


class PresentationError(ValueError):
    pass


class NonConfluent(ValueError):
    """An ambiguity whose two reductions differ; ``overlap`` names it."""

    def __init__(self, overlap, residue):
        super().__init__(f"non-confluent overlap {overlap}: difference {residue}")
        self.overlap = overlap
        self.residue = residue


class DegreeOverflow(ValueError):
    pass


class InfiniteNichols(ValueError):
    pass


def _acc(out, key, val):
    cur = out.get(key)
    nv = val if cur is None else cur + val
    if nv:
        out[key] = nv
    else:
        out.pop(key, None)


def _add_into(out, elem, s=ONE):
    for k, v in elem.items():
        _acc(out, k, s * v)
    return out


def _times_h(elem, h, s=ONE):
    """elem * h for an H8 basis index h."""
    out = {}
    for (w, h0), c in elem.items():
        for k, e in _HP[h0][h].items():
            _acc(out, (w, k), s * c * e)
    return out


def _lit(c):
    """A field element as text the polynomial parser accepts."""
    c = coerce(c)
    return "(" + c.render().replace("z", "zeta") + ")"


@dataclass
class Overlap:
    kind: str
    name: str
    residue: dict


class PresentedAlgebra:
    """Algebra over H8 generated by module letters, with optional Hopf data.

    ``comm[g][l]`` (g in 1, 2, 4) is a dict (l', h') -> c giving g l.  ``rules`` is a
    list of (lhs word, rhs element, text).  ``coproduct[l]`` maps a letter to a
    dict ((w1, h1), (w2, h2)) -> c.  ``max_degree`` truncates: forming a word
    longer than it raises DegreeOverflow.
    """

    def __init__(self, letters, comm, rules, coproduct=None, max_degree=None, name="A",
                 strict=True):
        self.letters = list(letters)
        self.name = name
        self.max_degree = max_degree
        self.comm_gen = comm
        self.coproduct = coproduct
        self.rules = []
        self._lhs = {}
        self._lhs_first = {}
        for lhs, rhs, text in rules:
            self._add_rule(tuple(lhs), rhs, text)
        self._comm_basis = self._build_comm()
        self._cw = {}
        self._nf = {}
        self._mt = {}
        self._dw = {}
        self._sw = {}
        self.failures = self.certify()
        if strict and self.failures:
            f = self.failures[0]
            raise NonConfluent(f.name, self.render(f.residue))
        self._words = None

    @property
    def words(self):
        """Normal words (None when confluence failed)."""
        if self.failures:
            return None
        if self._words is None:
            self._words = self.normal_words()
        return self._words

    # --- construction -----------------------------------------------------

    def _add_rule(self, lhs, rhs, text):
        if not lhs:
            raise PresentationError(f"relation {text!r} has no module letters")
        for (w, h), c in rhs.items():
            if len(w) > len(lhs) or (len(w) == len(lhs) and (h != 0 or w >= lhs)):
                raise PresentationError(f"relation {text!r} is not oriented: {self.render({(w, h): c})}")
        if lhs in self._lhs:
            raise PresentationError(f"two relations share the leading word {self.word_name(lhs)}")
        self.rules.append((lhs, rhs, text))
        self._lhs[lhs] = rhs
        self._lhs_first.setdefault(lhs[0], []).append(lhs)

    def _build_comm(self):
        n = len(self.letters)
        table = []
        for h in range(8):
            a, b, e = h & 1, (h >> 1) & 1, h >> 2
            word = [1] * a + [2] * b + [4] * e
            row = []
            for l in range(n):
                cur = {(l, 0): ONE}
                for g in reversed(word):
                    nxt = {}
                    for (l1, h1), c in cur.items():
                        for (l2, h2), d in self.comm_gen[g][l1].items():
                            for k, f in _HP[h2][h1].items():
                                _acc(nxt, (l2, k), c * d * f)
                    cur = nxt
                row.append(cur)
            table.append(row)
        return table

    # --- names and rendering ------------------------------------------------

    def word_name(self, w):
        return "*".join(self.letters[l] for l in w) if w else "1"

    def term_name(self, t):
        w, h = t
        if not w:
            return H8_LABELS[h]
        return self.word_name(w) + ("" if h == 0 else "*" + H8_LABELS[h])

    def render(self, elem):
        if not elem:
            return "0"
        parts = []
        for t in sorted(elem, key=lambda t: (len(t[0]), t[0], t[1])):
            c = elem[t]
            parts.append(self.term_name(t) if c == ONE else f"({c})*{self.term_name(t)}")
        return " + ".join(parts)

    def render_tensor(self, ten):
        if not ten:
            return "0"
        parts = []
        for (a, b) in sorted(ten, key=lambda k: (len(k[0][0]) + len(k[1][0]), k)):
            c = ten[(a, b)]
            s = f"{self.term_name(a)} | {self.term_name(b)}"
            parts.append(s if c == ONE else f"({c}) {s}")
        return " + ".join(parts)

    # --- reduction ------------------------------------------------------------

    def comm_word(self, h, w):
        """h * w as a dict (w', h') -> c."""
        key = (h, w)
        r = self._cw.get(key)
        if r is not None:
            return r
        if not w or h == 0:
            r = {(w, h): ONE}
        else:
            r = {}
            for (l2, h2), c in self._comm_basis[h][w[0]].items():
                for (rest, h3), d in self.comm_word(h2, w[1:]).items():
                    _acc(r, ((l2,) + rest, h3), c * d)
        self._cw[key] = r
        return r

    def _find(self, w):
        for i, l in enumerate(w):
            for lhs in self._lhs_first.get(l, ()):
                if w[i:i + len(lhs)] == lhs:
                    return i, lhs
        return None

    def nf_word(self, w):
        r = self._nf.get(w)
        if r is not None:
            return r
        if self.max_degree is not None and len(w) > self.max_degree:
            raise DegreeOverflow(f"word of degree {len(w)} exceeds the bound {self.max_degree}")
        hit = self._find(w)
        if hit is None:
            r = {(w, 0): ONE}
        else:
            i, lhs = hit
            a, b = w[:i], w[i + len(lhs):]
            r = {}
            for (wr, hr), c in self._lhs[lhs].items():
                for (b2, h2), d in self.comm_word(hr, b).items():
                    for t, e in self.nf_word(a + wr + b2).items():
                        for k, f in _HP[t[1]][h2].items():
                            _acc(r, (t[0], k), c * d * e * f)
        self._nf[w] = r
        return r

    def nf(self, elem):
        out = {}
        for (w, h), c in elem.items():
            _add_into(out, _times_h(self.nf_word(w), h), c)
        return out

    def mul_terms(self, t1, t2):
        key = (t1, t2)
        r = self._mt.get(key)
        if r is not None:
            return r
        (w1, h1), (w2, h2) = t1, t2
        r = {}
        for (w3, h3), c in self.comm_word(h1, w2).items():
            for (w4, h4), d in self.nf_word(w1 + w3).items():
                for k, e in _HP[h4][h3].items():
                    for k2, f in _HP[k][h2].items():
                        _acc(r, (w4, k2), c * d * e * f)
        self._mt[key] = r
        return r

    def mul(self, a, b):
        out = {}
        for t1, c in a.items():
            for t2, d in b.items():
                _add_into(out, self.mul_terms(t1, t2), c * d)
        return out

    # --- confluence -------------------------------------------------------------

    def certify(self):
        """Resolve every ambiguity; returns the list of failing overlaps."""
        bad = []
        n = len(self.letters)
        cb = self._comm_basis
        for h1 in range(8):
            for h2 in range(8):
                for l in range(n):
                    lhs = {}
                    for k, c in _HP[h1][h2].items():
                        _add_into(lhs, cb[k][l], c)
                    rhs = {}
                    for (l2, hb), c in cb[h2][l].items():
                        for (l3, ha), d in cb[h1][l2].items():
                            for k, e in _HP[ha][hb].items():
                                _acc(rhs, (l3, k), c * d * e)
                    if lhs != rhs:
                        diff = _add_into(dict(lhs), rhs, -ONE)
                        bad.append(Overlap("h8", f"{H8_LABELS[h1]}*{H8_LABELS[h2]}*{self.letters[l]}",
                                           {((l3,), k): c for (l3, k), c in diff.items()}))
        try:
            for g in (1, 2, 4):
                for lhs, rhs, text in self.rules:
                    r1 = {}
                    for (w, h), c in self.comm_word(g, lhs).items():
                        _add_into(r1, _times_h(self.nf_word(w), h), c)
                    r2 = self.mul({((), g): ONE}, rhs)
                    if r1 != r2:
                        bad.append(Overlap("commutation", f"{_GEN_NAMES[g]}*{self.word_name(lhs)}",
                                           _add_into(dict(r1), r2, -ONE)))
            for l1, r1_, _ in self.rules:
                for l2, r2_, _ in self.rules:
                    for k in range(1, min(len(l1), len(l2))):
                        if l1[-k:] != l2[:k]:
                            continue
                        a = self.mul(r1_, {(l2[k:], 0): ONE})
                        b = self.mul({(l1[:-k], 0): ONE}, r2_)
                        if a != b:
                            bad.append(Overlap("words", self.word_name(l1 + l2[k:]),
                                               _add_into(dict(a), b, -ONE)))
                    if l1 != l2 and len(l2) < len(l1):
                        for i in range(len(l1) - len(l2) + 1):
                            if l1[i:i + len(l2)] == l2:
                                a = r1_
                                b = self.mul(self.mul({(l1[:i], 0): ONE}, r2_),
                                             {(l1[i + len(l2):], 0): ONE})
                                if a != b:
                                    bad.append(Overlap("inclusion", self.word_name(l1),
                                                       _add_into(dict(a), b, -ONE)))
        except DegreeOverflow:
            pass
        return bad

    @property
    def certified(self):
        return not self.failures

    def normal_words(self, limit=200000):
        level = [()]
        out = [()]
        n = len(self.letters)
        while level:
            nxt = []
            for w in level:
                for l in range(n):
                    nw = w + (l,)
                    if self.max_degree is not None and len(nw) > self.max_degree:
                        continue
                    if any(nw[len(nw) - len(lhs):] == lhs for lhs in self._lhs if len(lhs) <= len(nw)):
                        continue
                    nxt.append(nw)
            out.extend(nxt)
            if len(out) > limit:
                raise PresentationError("more than %d normal words; the algebra is not finite" % limit)
            level = nxt
        return out

    @property
    def basis(self):
        return [(w, h) for w in self.words for h in range(8)]

    @property
    def dim(self):
        return 8 * len(self.words)

    def graded_dims(self):
        out = []
        for w in self.words:
            while len(out) <= len(w):
                out.append(0)
            out[len(w)] += 8
        return out

    # --- parsing elements ----------------------------------------------------

    def _monomial(self, word):
        cur = {((), 0): ONE}
        for sym in word:
            if sym in _GENS:
                cur = _times_h(cur, _GENS[sym])
            else:
                l = self.letters.index(sym)
                nxt = {}
                for (w, h), c in cur.items():
                    for (l2, h2), d in self._comm_basis[h][l].items():
                        _acc(nxt, (w + (l2,), h2), c * d)
                cur = nxt
        return cur

    def element(self, text):
        """Parse a polynomial in the letters and x, y, z; returns its normal form."""
        p = parse_poly(text, self.letters + list(_GENS))
        out = {}
        for word, c in p.items():
            _add_into(out, self.nf(self._monomial(word)), c)
        return out

    def tensor(self, text):
        p = parse_tensor(text, self.letters + list(_GENS))
        out = {}
        for (w1, w2), c in p.items():
            a = self.nf(self._monomial(w1))
            b = self.nf(self._monomial(w2))
            for t1, e in a.items():
                for t2, f in b.items():
                    _acc(out, (t1, t2), c * e * f)
        return out

    # --- Hopf structure ----------------------------------------------------------

    def tensor_mul(self, s, t):
        out = {}
        for (a1, a2), c in s.items():
            for (b1, b2), d in t.items():
                left = self.mul_terms(a1, b1)
                right = self.mul_terms(a2, b2)
                cd = c * d
                for k, e in left.items():
                    ce = cd * e
                    for l, f in right.items():
                        _acc(out, (k, l), ce * f)
        return out

    def _delta_h(self, h):
        return {(((), a), ((), b)): c for (a, b), c in _H.comult[h].items()}

    def delta_word(self, w):
        r = self._dw.get(w)
        if r is not None:
            return r
        if not w:
            r = {(((), 0), ((), 0)): ONE}
        else:
            r = self.tensor_mul(self.delta_word(w[:-1]), self.coproduct[w[-1]])
        self._dw[w] = r
        return r

    def delta(self, elem):
        out = {}
        for (w, h), c in elem.items():
            _add_into(out, self.tensor_mul(self.delta_word(w), self._delta_h(h)), c)
        return out

    def eps(self, elem):
        acc = ZERO
        for (w, h), c in elem.items():
            if not w:
                acc = acc + c
        return acc

    def _antipode_letter(self, l):
        out = {}
        seen_primary = False
        for (a, b), c in self.coproduct[l].items():
            if a == ((l,), 0) and b == ((), 0) and c == ONE:
                seen_primary = True
                continue
            if a[0]:
                raise PresentationError(f"coproduct of {self.letters[l]} is not of the form l|1 + H8|V")
            _add_into(out, self.mul({((), k): v for k, v in _HS[a[1]].items()}, {b: ONE}), -c)
        if not seen_primary:
            raise PresentationError(f"coproduct of {self.letters[l]} lacks the term l | 1")
        return out

    def antipode_word(self, w):
        r = self._sw.get(w)
        if r is not None:
            return r
        if not w:
            r = {((), 0): ONE}
        else:
            r = self.mul(self._antipode_letter(w[-1]), self.antipode_word(w[:-1]))
        self._sw[w] = r
        return r

    def antipode(self, elem):
        out = {}
        for (w, h), c in elem.items():
            _add_into(out, self.mul({((), k): v for k, v in _HS[h].items()}, self.antipode_word(w)), c)
        return out

    def generator_terms(self):
        """(name, term) for every letter and for x, y, z."""
        return [(n, ((l,), 0)) for l, n in enumerate(self.letters)] + \
            [(n, ((), g)) for n, g in _GENS.items()]

    def degree_one_module(self):
        """The YD module spanned by the letters (action from commutation, coaction from Delta)."""
        n = len(self.letters)
        act = []
        for h in range(8):
            M = CycloMatrix(n, n, {})
            for l in range(n):
                for (l2, _h2), c in self._comm_basis[h][l].items():
                    M.set(l2, l, M[l2, l] + c)
            act.append(M)
        coact = [CycloMatrix(n, n, {}) for _ in range(8)]
        for l in range(n):
            for (a, b), c in self.coproduct[l].items():
                if a == ((l,), 0) and b == ((), 0):
                    continue
                if a[0] or len(b[0]) != 1 or b[1]:
                    raise PresentationError("coproduct of a letter has an unexpected term")
                k, j = a[1], b[0][0]
                coact[k].set(j, l, coact[k][j, l] + c)
        return YdModule(act, coact, f"V({self.name})", None, None, "letters")

    def hopf(self):
        """Structure constants on the normal-form basis, as a HopfAlgebra."""
        basis = self.basis
        index = {t: i for i, t in enumerate(basis)}

        def vec(elem):
            return {index[t]: c for t, c in elem.items()}

        def product(i, j):
            return vec(self.mul_terms(basis[i], basis[j]))

        comult = []
        for (w, h) in basis:
            ten = self.tensor_mul(self.delta_word(w), self._delta_h(h))
            comult.append({(index[a], index[b]): c for (a, b), c in ten.items()})
        antipode = [vec(self.antipode({t: ONE})) for t in basis]
        counit = [ONE if not w else ZERO for (w, h) in basis]
        gens = [vec({t: ONE}) for _n, t in self.generator_terms()]
        nl = len(self.letters)
        fact = []
        for (w, h) in basis:
            a, b, e = h & 1, (h >> 1) & 1, h >> 2
            fact.append(tuple(w) + (nl,) * a + (nl + 1,) * b + (nl + 2,) * e)
        return HopfAlgebra([self.term_name(t) for t in basis], product, index[((), 0)], comult,
                           counit, antipode, generators=gens, factorization=fact, name=self.name)

    # --- text form -----------------------------------------------------------------

    def to_text(self):
        lines = [f"name: {self.name}", "letters: " + " ".join(self.letters)]
        if self.max_degree is not None:
            lines.append(f"max_degree: {self.max_degree}")
        for g in (1, 2, 4):
            for l in range(len(self.letters)):
                rhs = {((l2,), h2): c for (l2, h2), c in self.comm_gen[g][l].items()}
                lines.append(f"rel: {_GEN_NAMES[g]} {self.letters[l]} = {self._text_elem(rhs)}")
        for lhs, rhs, _ in self.rules:
            lines.append(f"rel: {' '.join(self.letters[l] for l in lhs)} = {self._text_elem(rhs)}")
        if self.coproduct:
            for l in range(len(self.letters)):
                terms = []
                for (a, b), c in self.coproduct[l].items():
                    terms.append(f"{_lit(c)} {self._text_term(a)} | {self._text_term(b)}")
                lines.append(f"coproduct: {self.letters[l]} = " + " + ".join(terms))
        return "\n".join(lines) + "\n"

    def _text_term(self, t):
        w, h = t
        syms = [self.letters[l] for l in w]
        syms += ["x"] * (h & 1) + ["y"] * ((h >> 1) & 1) + ["z"] * (h >> 2)
        return " ".join(syms) if syms else "1"

    def _text_elem(self, elem):
        if not elem:
            return "0"
        return " + ".join(f"{_lit(c)} {self._text_term(t)}" for t, c in elem.items())

    def __repr__(self):
        d = self.dim if self.words is not None else "?"
        return f"PresentedAlgebra({self.name}, dim={d})"


# --- text presentations -------------------------------------------------------------

_COMM_RE = re.compile(r"^\s*([xyz])\s+([A-Za-z_][A-Za-z_0-9]*)\s*$")


def parse_presentation(text, strict=True):
    """Build a PresentedAlgebra from a line-oriented document.

    Lines: ``name: ...``, ``letters: a b ...``, ``max_degree: N``,
    ``rel: lhs = rhs`` (a left side 'g a' with g in x, y, z is a commutation rule),
    ``coproduct: a = A | B + ...``.  '#' starts a comment.
    """
    name, letters, maxd = "A", None, None
    comm_lines, rel_lines, co_lines = [], [], []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, body = line.partition(":")
        key = key.strip()
        body = body.strip()
        if key == "name":
            name = body
        elif key == "letters":
            letters = body.split()
        elif key == "max_degree":
            maxd = int(body)
        elif key == "rel":
            lhs, eq, rhs = body.partition("=")
            if not eq:
                lhs, rhs = body, "0"
            if _COMM_RE.match(lhs):
                comm_lines.append((lhs, rhs, body))
            else:
                rel_lines.append((lhs, rhs, body))
        elif key == "coproduct":
            lhs, _, rhs = body.partition("=")
            co_lines.append((lhs.strip(), rhs, body))
        else:
            raise PresentationError(f"unknown line {raw!r}")
    if letters is None:
        raise PresentationError("missing 'letters:' line")
    if len(set(letters)) != len(letters) or any(l in _GENS or l in ("i", "zeta", "sqrt2", "sqrti")
                                                 for l in letters):
        raise PresentationError("letters must be distinct and differ from x, y, z and scalar names")
    n = len(letters)
    names = letters + list(_GENS)
    comm = {g: [None] * n for g in (1, 2, 4)}
    for lhs, rhs, body in comm_lines:
        g, l = _COMM_RE.match(lhs).groups()
        if l not in letters:
            raise PresentationError(f"unknown letter in {body!r}")
        out = {}
        for word, c in parse_poly(rhs, names).items():
            if not word or word[0] in _GENS or any(s not in _GENS for s in word[1:]):
                raise PresentationError(f"commutation rule {body!r} must read 'g a = sum c b h'")
            cur = {(letters.index(word[0]), 0): ONE}
            for s in word[1:]:
                cur = {(ll, k): v * e for (ll, h), v in cur.items() for k, e in _HP[h][_GENS[s]].items()}
            _add_into(out, cur, c)
        if comm[_GENS[g]][letters.index(l)] is not None:
            raise PresentationError(f"duplicate commutation rule {body!r}")
        comm[_GENS[g]][letters.index(l)] = out
    for g in (1, 2, 4):
        for l in range(n):
            if comm[g][l] is None:
                raise PresentationError(f"missing commutation rule for {_GEN_NAMES[g]} {letters[l]}")
    shell = PresentedAlgebra(letters, comm, [], None, maxd, name, strict=False)
    rules = []
    for lhs, rhs, body in rel_lines:
        rel = {}
        for word, c in parse_poly(lhs, names).items():
            _add_into(rel, shell._monomial(word), c)
        for word, c in parse_poly(rhs, names).items():
            _add_into(rel, shell._monomial(word), -c)
        if not rel:
            continue
        lead = max(w for (w, h) in rel)
        lead_terms = {h: c for (w, h), c in rel.items() if w == lead}
        if set(lead_terms) != {0}:
            raise PresentationError(f"leading word of {body!r} carries an H8 factor")
        inv = lead_terms[0].inverse()
        rhs_el = {t: -c * inv for t, c in rel.items() if t != (lead, 0)}
        rules.append((lead, rhs_el, body))
    coproduct = None
    if co_lines:
        coproduct = [None] * n
        for l, rhs, body in co_lines:
            if l not in letters:
                raise PresentationError(f"unknown letter in {body!r}")
            coproduct[letters.index(l)] = shell.tensor(rhs)
        if any(c is None for c in coproduct):
            raise PresentationError("every letter needs a coproduct")
    return PresentedAlgebra(letters, comm, rules, coproduct, maxd, name, strict=strict)


PresentedAlgebra.from_text = staticmethod(parse_presentation)


# --- algebras built from a Yetter-Drinfeld module -------------------------------------

def _module_comm(m):
    d = m.dim
    comm = {}
    for g in (1, 2, 4):
        rows = []
        for l in range(d):
            out = {}
            for (h1, h2), c in _H.comult[g].items():
                for l2, a in m.act[h1].column(l).items():
                    _acc(out, (l2, h2), c * a)
            rows.append(out)
        comm[g] = rows
    return comm


def _module_coproduct(m):
    d = m.dim
    out = []
    for l in range(d):
        t = {(((l,), 0), ((), 0)): ONE}
        for k in range(8):
            for j, c in m.coact[k].column(l).items():
                _acc(t, (((), k), ((j,), 0)), c)
        out.append(t)
    return out


def _letter_names(m, names):
    if names is None:
        return [f"m{j}" for j in range(m.dim)]
    if len(names) != m.dim:
        raise PresentationError(f"{m.dim} letter names needed")
    return list(names)


class SmashTruncation(PresentedAlgebra):
    """T(M)#H8 (optionally modulo word relations) with words of length at most D."""

    def __init__(self, m, D, ideal=(), names=None):
        if D < 2:
            raise ValueError("degree bound must be at least 2")
        letters = _letter_names(m, names)
        self.module = m
        self.degree_bound = D
        comm = _module_comm(m)
        shell = PresentedAlgebra(letters, comm, [], None, D, "shell", strict=False)
        rules = []
        for text in ideal:
            rel = shell.element(text)
            lead = max(w for (w, h) in rel)
            inv = rel[(lead, 0)].inverse()
            rules.append((lead, {t: -c * inv for t, c in rel.items() if t != (lead, 0)}, text))
        super().__init__(letters, comm, rules, _module_coproduct(m), D,
                         f"T({m.name})#H8" + (f"/({', '.join(ideal)})" if ideal else ""))

    def pi(self, elem):
        return {h: c for (w, h), c in elem.items() if not w}

    def iota(self, h):
        return {((), h): ONE}

    def check_invariants(self):
        rep = Report(f"invariants({self.name})")
        rep.add("pi o iota = id", all(self.pi(self.iota(h)) == {h: ONE} for h in range(8)))
        filt = all(len(w) <= len(l1) + len(l2)
                   for t1 in self.generator_terms() for t2 in self.generator_terms()
                   for (w, _h) in self.mul_terms(t1[1], t2[1])
                   for l1, l2 in [(t1[1][0], t2[1][0])])
        rep.add("product respects the filtration", filt)
        grading = True
        for w in self.words:
            if len(w) > self.degree_bound // 2:
                continue
            for (a, b) in self.delta_word(w):
                if len(a[0]) + len(b[0]) != len(w):
                    grading = False
        rep.add("coproduct respects the grading", grading)
        return rep


def smash_truncated(m, D=8, ideal=(), names=None):
    return SmashTruncation(m, D, ideal, names)


def check_identity(t, element, expected):
    """Delta(element) == expected, both given as text in the letters of t."""
    lhs = t.delta(t.element(element))
    rhs = t.tensor(expected)
    return lhs == rhs


def _group_indices(m):
    parts = _part_modules(m)
    n = len(parts)
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            a = parent[a]
        return a

    for i in range(n):
        for j in range(i + 1, n):
            if not factorize(parts[i], parts[j]):
                parent[find(i)] = find(j)
    groups = {}
    for i, (lab, off, dd) in enumerate(m.parts):
        groups.setdefault(find(i), []).extend(range(off, off + dd))
    return list(groups.values())


def _unit(d, i):
    v = [ZERO] * d
    v[i] = ONE
    return v


def _nichols_rules(g, offset, cfg):
    """Word rules of B(g) from reduced row echelon forms of the symmetrizer row spaces."""
    d = g.dim
    ech = row_spaces(g, cfg)
    top = len(ech) - 1
    rules = []
    standard = [{0}, set(range(d))]
    bs = braiding(g)
    for n in range(2, top + 2):
        if n <= top:
            rows = ech[n].rref()
            piv = sorted(ech[n].pivots)
            coords = {}
            for p, row in zip(piv, rows):
                for w, a in row.items():
                    coords.setdefault(w, {})[p] = a
            std = set(piv)
        else:
            coords, std = {}, set()
        standard.append(std)
        for w in range(d ** n):
            if w in std:
                continue
            if w // d not in standard[n - 1] or w % (d ** (n - 1)) not in standard[n - 1]:
                continue
            rhs = {p: a for p, a in coords.get(w, {}).items()}
            vec = {w: ONE}
            for p, a in rhs.items():
                _acc(vec, p, -a)
            if _sym_apply(bs, vec, n, n):
                raise PresentationError("derived Nichols relation is not in ker S_n")
            word = _digits(w, d, n)
            rules.append((tuple(offset + c for c in word),
                          {(tuple(offset + c for c in _digits(p, d, n)), 0): a for p, a in rhs.items()}))
    return rules


def _digits(w, d, n):
    out = []
    for _ in range(n):
        w, r = divmod(w, d)
        out.append(r)
    return out[::-1]


def bosonize(m, names=None, cfg=None):
    """B(m)#H8 as a presented algebra with its Hopf structure.

    Direct sums split into blocks that braid trivially with each other in both
    orders; B(m) is then the braided tensor product of the blocks' Nichols
    algebras, presented by each block's relations plus uv = c(u (x) v) for
    letters u, v from different blocks.
    """
    cfg = cfg or NicholsConfig()
    if m.basis == "w":
        m = _sparse_form(m)
    prof = graded_dims(m, 16, cfg)
    if not prof.finite:
        raise InfiniteNichols(f"B({m.name}) is not known to be finite ({prof.render()})")
    groups = _group_indices(m)
    order = [i for g in groups for i in g]
    if order != list(range(m.dim)):
        m = submodule(m, [_unit(m.dim, i) for i in order], m.name)
        groups_new, pos = [], 0
        for g in groups:
            groups_new.append(list(range(pos, pos + len(g))))
            pos += len(g)
        groups = groups_new
    rules = []
    for g in groups:
        gm = submodule(m, [_unit(m.dim, i) for i in g], "block")
        for lhs, rhs in _nichols_rules(gm, g[0], cfg):
            rules.append((lhs, rhs, "nichols"))
    c = m.braid_matrix()
    d = m.dim
    for gi, g in enumerate(groups):
        for g2 in groups[:gi]:
            for u in g:
                for v in g2:
                    rhs = {}
                    for t, a in c.column(u * d + v).items():
                        rhs[((t // d, t % d), 0)] = a
                    rules.append(((u, v), rhs, "braided commutator"))
    letters = _letter_names(m, names)
    alg = PresentedAlgebra(letters, _module_comm(m), rules, _module_coproduct(m), None,
                           f"B({m.name})#H8")
    if alg.dim != 8 * prof.total:
        raise PresentationError(f"normal-form count {alg.dim} differs from 8 x {prof.total}")
    alg.module = m
    return alg


# --- lifted families ------------------------------------------------------------------

FAMILIES = ("A1", "A2bos", "A4", "A6", "A7")
_COUNTS = {"A1": 4, "A2bos": 2, "A4": 2, "A6": 0, "A7": 0}


@dataclass
class LiftingParams:
    """Family tag, multiplicities and deformation scalars.

    Scalar keys are namespaced per family: A1 uses lambda[j,s], mu[j,t],
    zeta[k,s], theta[k,t] (deformation scalars, unrelated to the root of unity);
    A4 uses lambda1, lambda2, lambda[j,k] and the excluded deformations
    mu_prime[j], mu[k], shift[j]; A6 uses lambda and the excluded lambda3;
    A7 uses lambda1..lambda5.  Missing scalars are 0.
    """
    family: str
    counts: tuple = ()
    scalars: dict = field(default_factory=dict)

    def __post_init__(self):
        self.counts = tuple(int(c) for c in self.counts)
        self.scalars = {k: coerce(v) if not isinstance(v, str) else parse_number(v)
                        for k, v in self.scalars.items()}
        self.validate()

    def validate(self):
        if self.family not in FAMILIES:
            raise ValueError(f"family must be one of {', '.join(FAMILIES)}")
        if len(self.counts) != _COUNTS[self.family]:
            raise ValueError(f"{self.family} takes {_COUNTS[self.family]} multiplicities")
        if any(c < 0 for c in self.counts):
            raise ValueError("multiplicities must be non-negative")
        if self.family == "A1" and sum(self.counts) < 1:
            raise ValueError("A1 needs n1 + n2 + n3 + n4 >= 1")
        allowed = self._allowed()
        for k in self.scalars:
            if k not in allowed:
                raise ValueError(f"scalar {k!r} is not a parameter of {self.family} with counts {self.counts}")

    def _allowed(self):
        f, n = self.family, self.counts
        if f == "A1":
            n1, n2, n3, n4 = n
            return ({f"lambda[{j},{s}]" for j in range(1, n1 + 1) for s in range(1, n3 + 1)}
                    | {f"mu[{j},{t}]" for j in range(1, n1 + 1) for t in range(1, n4 + 1)}
                    | {f"zeta[{k},{s}]" for k in range(1, n2 + 1) for s in range(1, n3 + 1)}
                    | {f"theta[{k},{t}]" for k in range(1, n2 + 1) for t in range(1, n4 + 1)})
        if f == "A2bos":
            return set()
        if f == "A4":
            n1, n2 = n
            return ({"lambda1", "lambda2"}
                    | {f"lambda[{j},{k}]" for j in range(1, n1 + 1) for k in range(1, n2 + 1)}
                    | {f"mu_prime[{j}]" for j in range(1, n1 + 1)}
                    | {f"shift[{j}]" for j in range(1, n1 + 1)}
                    | {f"mu[{k}]" for k in range(1, n2 + 1)})
        if f == "A6":
            return {"lambda", "lambda3"}
        return {f"lambda{j}" for j in range(1, 6)}

    def get(self, key):
        return self.scalars.get(key, ZERO)

    @classmethod
    def from_dict(cls, d):
        return cls(d["family"], tuple(d.get("counts", ())), dict(d.get("scalars", {})))

    def to_dict(self):
        return {"family": self.family, "counts": list(self.counts),
                "scalars": {k: str(v) for k, v in self.scalars.items()}}


_DZ = "(1/2)(1 + y) z | z + (1/2)(1 - y) z | x z"
_F00, _F11 = "(1/4)(1 + x)(1 + y)", "(1/4)(1 - x)(1 - y)"
_F10, _F01 = "(1/4)(1 - x)(1 + y)", "(1/4)(1 + x)(1 - y)"


def _one_dim_lines(name, b, g):
    bb = {"i": "i", "-i": "(-i)"}[b]
    return [f"rel: x {name} = -{name} x", f"rel: y {name} = -{name} y",
            f"rel: z {name} = {bb} {name} x z"], f"coproduct: {name} = {name} | 1 + {g} | {name}"


def _pair_lines(a, b, g1, g2):
    return [f"rel: x {a} = {a} x", f"rel: y {a} = -{a} y", f"rel: z {a} = {b} z",
            f"rel: x {b} = -{b} x", f"rel: y {b} = {b} y", f"rel: z {b} = {a} x z",
            f"rel: {a} {a} = 0", f"rel: {b} {b} = 0",
            f"rel: {a} {b} {a} {b} + {b} {a} {b} {a} = 0"], \
        [f"coproduct: {a} = {a} | 1 + {g1} | {a}", f"coproduct: {b} = {b} | 1 + {g2} | {b}"]


def _w_lines(a, b, b1, l1, l2):
    ib = "i" if b1 == 1 else "(-i)"
    lam1, lam2 = _lit(l1), _lit(l2)
    rels = [f"rel: x {a} = {a} x", f"rel: y {a} = {a} y", f"rel: x {b} = -{b} x",
            f"rel: y {b} = -{b} y", f"rel: z {a} = -{a} z", f"rel: z {b} = {ib} {b} x z",
            f"rel: {a} {a} = {lam1} (1 - x y)", f"rel: {b} {b} = {ib} {lam1} (1 - x y)",
            f"rel: {a} {b} {a} {b} + {b} {a} {b} {a} = {lam2} (1 - x y)"]
    co = [f"coproduct: {a} = ({_F00} - {ib} {_F11}) z | {a} + ({_F10} + {ib} {_F01}) z | {b} + {a} | 1",
          f"coproduct: {b} = ({_F00} + {ib} {_F11}) z | {b} + ({_F10} - {ib} {_F01}) z | {a} + {b} | 1"]
    return rels, co


def preset_text(p):
    """The text presentation of a lifted family (printed relations, oriented by the parser)."""
    f, n = p.family, p.counts
    rels, cos, letters = [], [], []
    if f == "A1":
        n1, n2, n3, n4 = n
        X = [f"X{j}" for j in range(1, n1 + 1)]
        Y = [f"Y{k}" for k in range(1, n2 + 1)]
        P = [f"p{s}" for s in range(1, n3 + 1)]
        Q = [f"q{t}" for t in range(1, n4 + 1)]
        letters = X + Y + P + Q
        for names, b, g in ((X, "i", "x"), (Y, "-i", "x"), (P, "i", "y"), (Q, "-i", "y")):
            for a in names:
                r, c = _one_dim_lines(a, b, g)
                rels += r
                cos.append(c)
            for i1, a in enumerate(names):
                rels.append(f"rel: {a} {a} = 0")
                for a2 in names[i1 + 1:]:
                    rels.append(f"rel: {a} {a2} + {a2} {a} = 0")
        groups = [("X", X, "j"), ("Y", Y, "k"), ("p", P, "s"), ("q", Q, "t")]
        mixed = {("X", "Y"): None, ("X", "p"): "lambda", ("X", "q"): "mu",
                 ("Y", "p"): "zeta", ("Y", "q"): "theta", ("p", "q"): None}
        for (ga, gb), key in mixed.items():
            A = dict((g[0], g[1]) for g in groups)[ga]
            B = dict((g[0], g[1]) for g in groups)[gb]
            for ia, a in enumerate(A, 1):
                for ib_, b in enumerate(B, 1):
                    val = p.get(f"{key}[{ia},{ib_}]") if key else ZERO
                    rels.append(f"rel: {a} {b} + {b} {a} = {_lit(val)} (1 - x y)")
        name = f"A1({','.join(map(str, n))})"
    elif f == "A2bos":
        n1, n2 = n
        X = [f"X{j}" for j in range(1, n1 + 1)]
        Y = [f"Y{k}" for k in range(1, n2 + 1)]
        letters = X + Y + ["p1", "p2"]
        r, c = _pair_lines("p1", "p2", "x y", "x")
        rels += r
        cos += c
        for names, b in ((X, "i"), (Y, "-i")):
            for a in names:
                r, c = _one_dim_lines(a, b, "x")
                rels += r
                cos.append(c)
        XY = X + Y
        for i1, a in enumerate(XY):
            rels.append(f"rel: {a} {a} = 0")
            for a2 in XY[i1 + 1:]:
                rels.append(f"rel: {a} {a2} + {a2} {a} = 0")
        for a in XY:
            rels += [f"rel: p2 {a} + {a} p2 = 0", f"rel: p1 {a} - {a} p1 = 0"]
        name = f"A2bos({n1},{n2})"
    elif f == "A4":
        n1, n2 = n
        X = [f"X{j}" for j in range(1, n1 + 1)]
        Y = [f"Y{k}" for k in range(1, n2 + 1)]
        letters = X + Y + ["p1", "p2"]
        r, c = _w_lines("p1", "p2", 1, p.get("lambda1"), p.get("lambda2"))
        rels += r
        cos += c
        for names, g in ((X, "x"), (Y, "y")):
            for a in names:
                r, c = _one_dim_lines(a, "i", g)
                rels += r
                cos.append(c)
            for i1, a in enumerate(names):
                rels.append(f"rel: {a} {a} = 0")
                for a2 in names[i1 + 1:]:
                    rels.append(f"rel: {a} {a2} + {a2} {a} = 0")
        for j, a in enumerate(X, 1):
            for k, b in enumerate(Y, 1):
                rels.append(f"rel: {a} {b} + {b} {a} = {_lit(p.get(f'lambda[{j},{k}]'))} (1 - x y)")
        for j, a in enumerate(X, 1):
            mp, sh = _lit(p.get(f"mu_prime[{j}]")), _lit(p.get(f"shift[{j}]"))
            rels.append(f"rel: p1 {a} - {a} p1 = -{mp} ({_F10} - i {_F01}) z + {sh} ({_F10} - i {_F01}) z")
            rels.append(f"rel: p2 {a} + {a} p2 = -{mp} ({_F00} - i {_F11}) z + {mp}")
        for k, b in enumerate(Y, 1):
            mu = _lit(p.get(f"mu[{k}]"))
            rels.append(f"rel: p1 {b} - {b} p1 = -{mu} (-{_F10} + i {_F01}) z")
            rels.append(f"rel: p2 {b} + {b} p2 = -{mu} ({_F00} - i {_F11}) z + {mu}")
        name = f"A4({n1},{n2})"
    elif f == "A6":
        letters = ["p1", "p2", "q1", "q2"]
        for a, b, g1, g2 in (("p1", "p2", "y", "x y"), ("q1", "q2", "x y", "x")):
            r, c = _pair_lines(a, b, g1, g2)
            rels += r
            cos += c
        lam, lam3 = _lit(p.get("lambda")), _lit(p.get("lambda3"))
        rels += [f"rel: p1 q1 + q1 p1 = {lam} (1 - x)", f"rel: p2 q2 + q2 p2 = {lam} (1 - y)",
                 f"rel: p1 q2 - q2 p1 = {lam3} (1 - x y)", "rel: p2 q1 + q1 p2 = 0"]
        name = "A6"
    else:
        letters = ["p1", "p2", "q1", "q2"]
        L = [p.get(f"lambda{j}") for j in range(1, 6)]
        for a, b, b1, l1, l2 in (("p1", "p2", 1, L[0], L[1]), ("q1", "q2", -1, L[2], L[3])):
            r, c = _w_lines(a, b, b1, l1, l2)
            rels += r
            cos += c
        l5 = _lit(L[4])
        rels += ["rel: p1 q2 + q2 p1 = 0", "rel: p2 q1 + q1 p2 = 0",
                 f"rel: p1 q1 + q1 p1 = {l5} (x + y - 2)", f"rel: p2 q2 - q2 p2 = -i {l5} (x - y)"]
        name = "A7"
    head = [f"name: {name}", "letters: " + " ".join(letters)]
    return "\n".join(head + rels + cos) + "\n"


def build_lifting(p, strict=True):
    """The lifted Hopf algebra of a family; strict=False keeps failing overlaps in ``failures``."""
    if isinstance(p, dict):
        p = LiftingParams.from_dict(p)
    alg = parse_presentation(preset_text(p), strict=strict)
    alg.params = p
    return alg


# --- verification -------------------------------------------------------------------------

def _rule_tensor(alg, rhs):
    out = {}
    for t, c in rhs.items():
        _add_into(out, alg.tensor_mul(alg.delta_word(t[0]), alg._delta_h(t[1])), c)
    return out


def hopf_verify_lifting(alg, structure=None):
    """Report on the Hopf structure of a presented algebra.

    Confluence, Delta and epsilon on every relation, coassociativity and counit on
    generators, and the antipode (solved letter by letter from the convolution
    identity) checked on the whole basis.  ``structure=True`` also runs the
    structure-constant verifier; by default only when dim <= 128.
    """
    rep = Report(f"hopf_verify_lifting({alg.name})")
    rep.add("confluence", alg.certified, "; ".join(f.name for f in alg.failures[:3]))
    if not alg.certified:
        return rep
    bad = []
    for lhs, rhs, text in alg.rules:
        if alg.delta_word(lhs) != _rule_tensor(alg, rhs):
            bad.append(text)
    for g in (1, 2, 4):
        for l in range(len(alg.letters)):
            lhs = alg.tensor_mul(alg._delta_h(g), alg.coproduct[l])
            rhs = {}
            for (l2, h2), c in alg.comm_gen[g][l].items():
                _add_into(rhs, alg.tensor_mul(alg.coproduct[l2], alg._delta_h(h2)), c)
            if lhs != rhs:
                bad.append(f"{_GEN_NAMES[g]} {alg.letters[l]} = ...")
    rep.add("Delta respects the relations", not bad, "; ".join(bad[:3]))
    bad = [text for lhs, rhs, text in alg.rules if alg.eps(rhs)]
    rep.add("epsilon respects the relations", not bad, "; ".join(bad[:3]))
    bad_co, bad_cu = [], []
    for name, t in alg.generator_terms():
        d = alg.delta({t: ONE})
        left, right = {}, {}
        for (a, b), c in d.items():
            for (a1, a2), e in alg.delta({a: ONE}).items():
                _acc(left, (a1, a2, b), c * e)
            for (b1, b2), e in alg.delta({b: ONE}).items():
                _acc(right, (a, b1, b2), c * e)
        if left != right:
            bad_co.append(name)
        l_, r_ = {}, {}
        for (a, b), c in d.items():
            if not a[0]:
                _acc(l_, b, c)
            if not b[0]:
                _acc(r_, a, c)
        if l_ != {t: ONE} or r_ != {t: ONE}:
            bad_cu.append(name)
    rep.add("coassociativity on generators", not bad_co, ", ".join(bad_co))
    rep.add("counit on generators", not bad_cu, ", ".join(bad_cu))
    try:
        bad = []
        idx = {t: i for i, t in enumerate(alg.basis)}
        s_rows = []
        for t in alg.basis:
            s_rows.append({idx[u]: c for u, c in alg.antipode({t: ONE}).items()})
            d = alg.tensor_mul(alg.delta_word(t[0]), alg._delta_h(t[1]))
            e = ONE if not t[0] else ZERO
            target = {((), 0): e} if e else {}
            s1, s2 = {}, {}
            for (a, b), c in d.items():
                _add_into(s1, alg.mul(alg.antipode({a: ONE}), {b: ONE}), c)
                _add_into(s2, alg.mul({a: ONE}, alg.antipode({b: ONE})), c)
            if s1 != target or s2 != target:
                bad.append(alg.term_name(t))
                if len(bad) > 3:
                    break
        rep.add("antipode solves the convolution identity on the basis", not bad, ", ".join(bad[:3]))
        if not bad:
            rep.add("antipode is invertible", _rank(s_rows, alg.dim) == alg.dim)
    except PresentationError as e:
        rep.add("antipode solves the convolution identity on the basis", False, str(e))
    if structure is None:
        structure = alg.dim <= 128
    if structure:
        for c in verify_hopf(alg.hopf()).checks:
            rep.add("structure constants: " + c.name, c.ok, c.detail)
    return rep


def _rank(rows, d):
    return mat_rank(CycloMatrix(len(rows), d, {i: r for i, r in enumerate(rows) if r}))


def iso_check(a, b, images=None):
    """Is the map given on generators a Hopf isomorphism a -> b?

    ``images`` maps letter names of a (and optionally x, y, z) to elements of b,
    as text or as dicts; H8 is preserved unless images for x, y, z are given.
    Returns a Report.
    """
    if a.dim != b.dim:
        from .cyclo import DimensionMismatch
        raise DimensionMismatch(f"dimensions {a.dim} and {b.dim} differ")
    images = dict(images or {})
    img = {}
    for name, t in a.generator_terms():
        v = images.get(name)
        if v is None:
            if name in _GENS:
                v = {t: ONE}
            else:
                raise ValueError(f"no image for generator {name}")
        img[t] = b.element(v) if isinstance(v, str) else v
    rep = Report(f"iso_check({a.name} -> {b.name})")
    phi_w = {(): {((), 0): ONE}}
    phi_h = {}
    for h in range(8):
        v = {((), 0): ONE}
        for g, bit in ((1, h & 1), (2, (h >> 1) & 1), (4, h >> 2)):
            if bit:
                v = b.mul(v, img[((), g)])
        phi_h[h] = v
    for w in a.words:
        if w:
            phi_w[w] = b.mul(phi_w[w[:-1]], img[((w[-1],), 0)])

    def phi(elem):
        out = {}
        for (w, h), c in elem.items():
            _add_into(out, b.mul(phi_w[w], phi_h[h]), c)
        return out

    bidx = {t: i for i, t in enumerate(b.basis)}
    rows = []
    for t in a.basis:
        rows.append({bidx[s]: c for s, c in phi({t: ONE}).items()})
    rep.add("bijective", _rank(rows, b.dim) == b.dim)
    bad = []
    gens = a.generator_terms()
    for t in a.basis:
        pt = phi({t: ONE})
        for name, g in gens:
            if phi(a.mul_terms(t, g)) != b.mul(pt, img[g]):
                bad.append(f"{a.term_name(t)}*{name}")
                break
        if len(bad) > 3:
            break
    rep.add("multiplicative", not bad, ", ".join(bad))
    bad_d, bad_e = [], []
    for name, g in gens:
        lhs = {}
        for (s, t), c in a.delta({g: ONE}).items():
            ps, pt = phi({s: ONE}), phi({t: ONE})
            for u, e in ps.items():
                for v, f in pt.items():
                    _acc(lhs, (u, v), c * e * f)
        if lhs != b.delta(img[g]):
            bad_d.append(name)
        if a.eps({g: ONE}) != b.eps(img[g]):
            bad_e.append(name)
    rep.add("comultiplicative", not bad_d, ", ".join(bad_d))
    rep.add("counital", not bad_e, ", ".join(bad_e))
    return rep


def induced_maps(a, b):
    """Generator maps a -> b induced by H8 automorphisms tau with V(a) isomorphic to V(b)^tau.

    Yields (tau name, images) pairs; letters go to the linear combination given by
    the Yetter-Drinfeld isomorphism, H8 goes through tau.
    """
    ma, mb = a.degree_one_module(), b.degree_one_module()
    if ma.dim != mb.dim:
        return
    for tname, tau in automorphisms().items():
        target = twist(mb, tau)
        hs = hom_space(ma, target)
        if not hs:
            continue
        for coeffs in ([1] * len(hs), list(range(1, len(hs) + 1))):
            T = CycloMatrix.zeros(mb.dim, ma.dim)
            for c, M in zip(coeffs, hs):
                T = T + M.scale(c)
            if mat_rank(T) == ma.dim:
                break
        else:
            continue
        images = {}
        for j, name in enumerate(a.letters):
            images[name] = {((i,), 0): c for i, c in T.column(j).items()}
        for gname, g in _GENS.items():
            images[gname] = {((), k): c for k, c in tau.images[g].items()}
        yield tname, images
