"""Nichols-algebra dimension tables for simple modules and sums of two simples."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .expr import parse, to_module
from .nichols import (NicholsConfig, ResourceCap, factor_groups, graded_dims, gk_estimate,
                      _sparse_form)

__all__ = ["TableRow", "TABLE2", "TABLE3", "degree_cap", "block_dim", "profile",
           "compute_row", "RowResult"]


@dataclass
class TableRow:
    module: str
    condition: str
    instances: list
    dim: int | None          # None: infinite
    gk: str = ""
    open: bool = False       # the undetermined cell


def _one(pairs):
    return [f"M({b},{g})" for b, g in pairs]


_PM1 = _one([("1", "1"), ("-1", "1"), ("1", "xy"), ("-1", "xy")])
_PMI = _one([("i", "x"), ("-i", "x"), ("i", "y"), ("-i", "y")])


def _pairs(a, b=None):
    if b is None:
        return [f"{u} + {v}" for u, v in itertools.combinations_with_replacement(a, 2)]
    return [f"{u} + {v}" for u in a for v in b]


TABLE2 = [
    TableRow("M(b,g)", "(b,g) in {(+-1,1),(+-1,xy)}", _PM1, None, "1"),
    TableRow("M(b,g)", "(b,g) in {(+-i,x),(+-i,y)}", _PMI, 2, "0"),
    TableRow("P1xy", "", ["P1xy"], None, "2"),
    TableRow("Pxy", "", ["Pxy"], None, "2"),
    TableRow("M2(g1,g2)", "(g1,g2) in {(1,y),(x,1)}", ["M2(1,y)", "M2(x,1)"], None, "inf"),
    TableRow("M2(g1,g2)", "(g1,g2) in {(xy,x),(y,xy)}", ["M2(xy,x)", "M2(y,xy)"], 8, "0"),
    TableRow("W(b1,b2)", "b1 = +-1, b2 = -1", ["W(1,-1)", "W(-1,-1)"], 8, "0"),
    TableRow("W(b1,b2)", "b1 = +-1, b2 = 1", ["W(1,1)", "W(-1,1)"], None, "inf"),
    TableRow("W1(a), W2(a)", "a+1 = +-sqrt2", ["W1(s2p)", "W1(s2m)", "W2(s2p)", "W2(s2m)"], None, ""),
]

_A2 = ["M2(xy,x)", "M2(y,xy)"]

TABLE3 = [
    TableRow("M(b1,g1) + M(b2,g2)", "both in {(+-1,1),(+-1,xy)}", _pairs(_PM1), None, "2"),
    TableRow("M(b1,g1) + M(b2,g2)", "(b1,g1) in {(+-1,1),(+-1,xy)}, (b2,g2) in {(+-i,x),(+-i,y)}",
             _pairs(_PM1, _PMI), None, "1"),
    TableRow("M(b1,g1) + M(b2,g2)", "both in {(+-i,x),(+-i,y)}", _pairs(_PMI), 4, "0"),
    TableRow("M(b,g) + P1xy", "(b,g) in {(+-1,1),(+-1,xy)}", _pairs(_PM1, ["P1xy"]), None, "3"),
    TableRow("M(b,g) + Pxy", "(b,g) in {(+-1,1),(+-1,xy)}", _pairs(_PM1, ["Pxy"]), None, "3"),
    TableRow("M2(g1,g2) + M2(g1,g2)", "(g1,g2) = (xy,x) or (y,xy)", ["2*M2(xy,x)", "2*M2(y,xy)"], None),
    TableRow("M2(xy,x) + M2(y,xy)", "", ["M2(xy,x) + M2(y,xy)"], 64, "0"),
    TableRow("W(b1,-1) + W(b1',-1)", "b1 = b1' = +-1", ["2*W(1,-1)", "2*W(-1,-1)"], None),
    TableRow("W(b1,-1) + W(b1',-1)", "b1 = 1, b1' = -1", ["W(1,-1) + W(-1,-1)"], 64, "0"),
    TableRow("M2(g1,g2) + W(b1,-1)", "(g1,g2) = (xy,x) or (y,xy), b1 = +-1",
             _pairs(_A2, ["W(1,-1)", "W(-1,-1)"]), None, "", open=True),
    TableRow("M(b,g) + M2(g1,g2)", "(b,g) = (+-i,x), (g1,g2) = (xy,x)",
             _pairs(_one([("i", "x"), ("-i", "x")]), ["M2(xy,x)"]), 16, "0"),
    TableRow("M(b,g) + M2(g1,g2)", "(b,g) = (+-i,x), (g1,g2) = (y,xy)",
             _pairs(_one([("i", "x"), ("-i", "x")]), ["M2(y,xy)"]), None),
    TableRow("M(b,g) + M2(g1,g2)", "(b,g) = (+-i,y), (g1,g2) = (xy,x)",
             _pairs(_one([("i", "y"), ("-i", "y")]), ["M2(xy,x)"]), None),
    TableRow("M(b,g) + M2(g1,g2)", "(b,g) = (+-i,y), (g1,g2) = (y,xy)",
             _pairs(_one([("i", "y"), ("-i", "y")]), ["M2(y,xy)"]), 16, "0"),
    TableRow("M(b,g) + M2(g1,g2)", "(b,g) = (+-1,1), (g1,g2) in {(xy,x),(y,xy)}",
             _pairs(_one([("1", "1"), ("-1", "1")]), _A2), None, "1"),
    TableRow("M(b,g) + W(b1,-1)", "(b,g) in {(1,1),(1,xy)}, b1 = +-1",
             _pairs(_one([("1", "1"), ("1", "xy")]), ["W(1,-1)", "W(-1,-1)"]), None, "1"),
    TableRow("M(b,g) + W(b1,-1)", "(b,g) in {(i,x),(i,y)}, b1 = 1",
             _pairs(_one([("i", "x"), ("i", "y")]), ["W(1,-1)"]), 16, "0"),
    TableRow("M(b,g) + W(b1,-1)", "(b,g) in {(i,x),(i,y)}, b1 = -1",
             _pairs(_one([("i", "x"), ("i", "y")]), ["W(-1,-1)"]), None),
    TableRow("M(b,g) + W(b1,-1)", "(b,g) in {(-i,x),(-i,y)}, b1 = -1",
             _pairs(_one([("-i", "x"), ("-i", "y")]), ["W(-1,-1)"]), 16, "0"),
    TableRow("M(b,g) + W(b1,-1)", "(b,g) in {(-i,x),(-i,y)}, b1 = 1",
             _pairs(_one([("-i", "x"), ("-i", "y")]), ["W(1,-1)"]), None),
]


def degree_cap(d):
    """Default degree cap for a block of dimension d."""
    if d <= 2:
        return 12
    if d <= 4:
        return 6
    return 4


def block_dim(m):
    """Largest summand group that does not split off as a tensor factor."""
    m = _sparse_form(m)
    if len(m.parts) == 1:
        return m.dim
    return max(g.dim for g in factor_groups(m))


def profile(m, cutoff, cache=None, factor=True, cfg=None):
    """Graded profile through the disk cache (when given); cold runs bypass the in-memory cache."""
    mode = "factor" if factor else "direct"
    if cache is not None:
        hit = cache.get(m, cutoff, mode)
        if hit is not None:
            return hit
    p = graded_dims(m, cutoff, cfg or NicholsConfig(), factor=factor, use_cache=False)
    p.seconds = []
    p.note = ""
    if cache is not None:
        cache.put(m, p, mode)
    return p


@dataclass
class RowResult:
    row: TableRow
    cells: list = field(default_factory=list)     # (expr, profile, cutoff)
    cross: list = field(default_factory=list)     # (expr, ok) for the low-degree direct check
    ok: bool = True

    def dim_text(self):
        if self.row.open:
            return "; ".join(p.render() for _e, p, _c in self.cells)
        totals = {p.total for _e, p, _c in self.cells}
        if self.row.dim is not None:
            return ",".join(str(t) if t is not None else "open" for t in sorted(totals, key=str))
        return "; ".join(sorted({p.render() for _e, p, _c in self.cells}))


def compute_row(row, max_degree=8, cache=None, cross_check=False, cfg=None):
    """Profiles of every instance; finite rows must reproduce the printed dimension."""
    res = RowResult(row)
    for text in row.instances:
        m = to_module(parse(text))
        cap = degree_cap(block_dim(m))
        cutoff = cap if row.dim is not None else min(cap, max_degree)
        p = profile(m, cutoff, cache, cfg=cfg)
        res.cells.append((text, p, cutoff))
        if row.dim is not None:
            res.ok &= p.finite and p.total == row.dim
            if cross_check:
                top = min(4, degree_cap(m.dim))
                direct = profile(m, top, cache, factor=False, cfg=cfg)
                fine = p.dims[:top + 1] + [0] * (top + 1 - len(p.dims[:top + 1]))
                got = direct.dims + [0] * (top + 1 - len(direct.dims))
                entry_ok = got[:top + 1] == fine
                res.cross.append((text, entry_ok))
                res.ok &= entry_ok
        elif not row.open:
            # a computed finite total would contradict an infinite cell
            res.ok &= not p.finite
        else:
            res.ok &= not p.finite
    return res


def gk_text(p):
    try:
        return f"{gk_estimate(p):.2f}"
    except ValueError:
        return ""
