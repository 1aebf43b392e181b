"""Regenerate tests/data/oracle_frozen.json from the floating-point reference in tests/oracles.py."""
from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "tests"))

import oracles  # noqa: E402
from h8nichols.expr import to_module  # noqa: E402
from h8nichols.yd import PairGG, W, W1, direct_sum, simple  # noqa: E402

PROFILES = [
    ("W(1,-1)", 5), ("W(-1,-1)", 5), ("M2(xy,x)", 5), ("M2(1,y)", 5), ("P1xy", 6), ("Pxy", 6),
    ("W(1,1)", 5), ("W1(s2p)", 5), ("W1(s2m)", 5), ("W2(s2p)", 5), ("M(i,x)", 3), ("M(1,1)", 4),
    ("W(1,-1) + W(-1,-1)", 4), ("M2(xy,x) + M2(y,xy)", 4), ("M(i,x) + M2(xy,x)", 4),
    ("M(i,x) + M2(y,xy)", 4), ("M(1,1) + W(1,-1)", 4),
]


def conjecture_module(b1, which):
    g = {"xy,x": ("xy", "x"), "y,xy": ("y", "xy")}[which]
    return direct_sum(simple(PairGG(*g)), simple(W(b1, -1), "p"))


def main():
    out = {"profiles": {}, "conjecture": {}, "eigen": {}}
    for text, top in PROFILES:
        out["profiles"][text] = oracles.nichols_dims(to_module(text), top)
        print(text, out["profiles"][text], flush=True)
    for b1 in (1, -1):
        for which in ("xy,x", "y,xy"):
            key = f"{b1}|{which}"
            out["conjecture"][key] = oracles.nichols_dims(conjecture_module(b1, which), 5)
            print(key, out["conjecture"][key], flush=True)
    for branch in (1, -1):
        mod = simple(W1(branch))
        for n in (1, 2, 3):
            odd = oracles.shuffle_eigenvalue(mod, [0, 1] * n)
            even = oracles.shuffle_eigenvalue(mod, [0, 1] * n + [0])
            out["eigen"][f"{branch}|{n}"] = {"odd": [odd.real, odd.imag], "even": [even.real, even.imag]}
    path = ROOT / "tests" / "data" / "oracle_frozen.json"
    path.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")
    print("wrote", path)


if __name__ == "__main__":
    main()
