"""Degree-by-degree profiles of B(M<(g1,g2)> + W^{b1,-1}) for both pair modules and both b1.

    python scripts/conjecture_probe.py [--max-degree 6]
"""
import argparse
import time

from h8nichols.nichols import conjecture_probe

if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-degree", type=int, default=6)
    a = ap.parse_args()
    for b1 in (1, -1):
        for which in ("xy,x", "y,xy"):
            t0 = time.time()

            def tick(n, dim):
                print(f"  b1={b1:+d} ({which}) degree {n}: {dim}  [{time.time() - t0:.1f} s]", flush=True)

            p = conjecture_probe(b1, which, a.max_degree, on_degree=tick)
            print(f"b1={b1:+d} M2({which}) + W: {p.render()}", flush=True)
