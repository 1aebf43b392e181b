"""Build and verify each lifted family with sample scalars; show the rejected deformations."""
import time

from h8nichols.liftings import LiftingParams, NonConfluent, build_lifting, hopf_verify_lifting

CASES = [
    LiftingParams("A1", (1, 0, 0, 0)),
    LiftingParams("A1", (1, 1, 1, 1), {"lambda[1,1]": 1, "theta[1,1]": "2 + i"}),
    LiftingParams("A1", (1, 1, 1, 1), {"mu[1,1]": 1}),
    LiftingParams("A4", (1, 1), {"lambda1": 1, "lambda2": 2, "lambda[1,1]": 3}),
    LiftingParams("A4", (1, 1), {"mu_prime[1]": 1}),
    LiftingParams("A4", (1, 0), {"shift[1]": 1}),
    LiftingParams("A6", (), {"lambda": "-3/2"}),
    LiftingParams("A6", (), {"lambda": 1, "lambda3": 1}),
    LiftingParams("A7", (), {f"lambda{j}": j for j in range(1, 6)}),
]

if __name__ == "__main__":
    for p in CASES:
        t0 = time.time()
        label = f"{p.family}{tuple(p.counts)} {p.to_dict()['scalars']}"
        try:
            a = build_lifting(p)
        except NonConfluent as e:
            print(f"{label}: rejected at overlap {e.overlap}")
            continue
        rep = hopf_verify_lifting(a, structure=False)
        bad = [c.name for c in rep.checks if not c.ok]
        print(f"{label}: dim {a.dim}, {'Hopf' if rep.ok else 'fails: ' + '; '.join(bad)}"
              f"  [{time.time() - t0:.0f} s]", flush=True)
