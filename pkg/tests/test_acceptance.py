"""Acceptance gate: one test group per criterion, one summary line per criterion.

Every part records its outcome; conftest prints ``criterion N: PASS|FAIL`` lines at
the end of the run.  Parts that do not hold as stated are strict xfails, so they
turn the run red if they ever start passing.
"""
import time

import pytest

from h8nichols.cyclo import ONE
from h8nichols.expr import parse, to_module
from h8nichols.liftings import (LiftingParams, NonConfluent, build_lifting, check_identity,
                                hopf_verify_lifting, smash_truncated)
from h8nichols.nichols import (NicholsConfig, braiding, conjecture_probe, diagonal_form, dynkin,
                               eigen_probe_w1a, gk_estimate, graded_dims, verify_braiding)
from h8nichols.tables import TABLE2, TABLE3, compute_row
from h8nichols.yd import (PairGG, W, all_simple_labels, decompose, direct_sum,
                          hom_space, radford, simple, v1_module, v2_module, verify_yd)

RESULTS = {}

DESCRIPTIONS = {
    1: "simple-module table, finite rows",
    2: "two-summand table, finite rows with direct cross-check",
    3: "simple-module table, infinite rows profiled",
    4: "catalog integrity",
    5: "Radford coverage",
    6: "W1 eigenvalue formula",
    7: "Dynkin verdicts",
    8: "liftings",
    9: "coproduct identities",
    10: "conjecture probe",
}


def record(n, part, ok, detail=""):
    RESULTS.setdefault(n, []).append((part, bool(ok), detail))
    return ok


# --- 1 -------------------------------------------------------------------------


def test_criterion_1_table2_finite_rows():
    t0 = time.time()
    expected = {"M(i,x)": 2, "M(-i,x)": 2, "M(i,y)": 2, "M(-i,y)": 2,
                "M2(xy,x)": 8, "M2(y,xy)": 8, "W(1,-1)": 8, "W(-1,-1)": 8}
    got = {}
    for row in TABLE2:
        if row.dim is None:
            continue
        res = compute_row(row)
        for text, p, _cut in res.cells:
            got[text] = p.total if p.finite else None
    elapsed = time.time() - t0
    record(1, "dimensions", got == expected, str(got))
    record(1, "runtime < 60 s", elapsed < 60, f"{elapsed:.1f} s")
    assert got == expected
    assert elapsed < 60


# --- 2 -------------------------------------------------------------------------


def test_criterion_2_table3_finite_rows():
    t0 = time.time()
    totals = {}
    cross = []
    for row in TABLE3:
        if row.dim is None:
            continue
        res = compute_row(row, cross_check=True)
        for text, p, _cut in res.cells:
            totals[text] = (p.total if p.finite else None, row.dim)
        cross += res.cross
    elapsed = time.time() - t0
    bad = {k: v for k, v in totals.items() if v[0] != v[1]}
    record(2, "dimensions 4, 16, 64", not bad and {v[1] for v in totals.values()} == {4, 16, 64},
           str(bad))
    bad_cross = [t for t, ok in cross if not ok]
    record(2, "direct ranks agree at degrees <= 4", cross and not bad_cross, str(bad_cross))
    record(2, "runtime < 600 s", elapsed < 600, f"{elapsed:.1f} s")
    assert not bad
    assert cross and not bad_cross
    assert elapsed < 600


# --- 3 -------------------------------------------------------------------------


@pytest.mark.parametrize("text", ["M(1,1)", "M(-1,1)", "M(1,xy)", "M(-1,xy)"])
def test_criterion_3_rank_one_rows(text):
    p = graded_dims(to_module(text), 40, NicholsConfig(), use_cache=False)
    ok = p.dims == [1] * 41 and not p.finite
    est = gk_estimate(p)
    record(3, f"{text} dims 1 to n = 40", ok, str(p.dims[:6]))
    record(3, f"{text} gk 1 +- 0.1", abs(est - 1) <= 0.1, f"{est:.3f}")
    assert ok
    assert abs(est - 1) <= 0.1


@pytest.mark.parametrize("text", ["P1xy", "Pxy"])
def test_criterion_3_rank_two_rows(text):
    p = graded_dims(to_module(text), 12, NicholsConfig(), use_cache=False)
    want = [(n + 1) * (n + 2) // 2 for n in range(13)]
    est = gk_estimate(p)
    record(3, f"{text} cumulative (n+1)(n+2)/2", p.cumulative() == want, str(p.cumulative()))
    record(3, f"{text} gk 2 +- 0.2", abs(est - 2) <= 0.2, f"{est:.3f}")
    assert p.cumulative() == want
    assert abs(est - 2) <= 0.2


# --- 4 -------------------------------------------------------------------------


def test_criterion_4_catalog_integrity():
    mods = [simple(lab) for lab in all_simple_labels()]
    assert len(mods) == 22
    bad_yd = [m.name for m in mods if not verify_yd(m).ok]
    record(4, "22 simples pass verify_yd", not bad_yd, str(bad_yd))
    bad_hom = []
    for i, a in enumerate(mods):
        for j, b in enumerate(mods):
            want = 1 if i == j else 0
            if len(hom_space(a, b)) != want:
                bad_hom.append((a.name, b.name))
    record(4, "Schur property on 22 x 22", not bad_hom, str(bad_hom[:3]))
    bad_ybe = [m.name for m in mods if not verify_braiding(braiding(m)).ok]
    record(4, "braid equation exact", not bad_ybe, str(bad_ybe))
    assert not bad_yd and not bad_hom and not bad_ybe


# --- 5 -------------------------------------------------------------------------


def test_criterion_5_radford_coverage():
    seen = set()
    certs = []
    for L in [v1_module(b) for b in ("1", "-1", "i", "-i")] + [v2_module()]:
        m = radford(L)
        dec = decompose(m)
        total = sum(k * simple(lab).dim for lab, k in dec.items())
        certs.append(total == m.dim)
        seen |= set(dec)
    labels = set(all_simple_labels())
    record(5, "union is all 22 labels", seen == labels, f"{len(seen)} labels")
    record(5, "dimension-sum certificates", all(certs), str(certs))
    assert seen == labels
    assert all(certs)


# --- 6 -------------------------------------------------------------------------


@pytest.mark.parametrize("branch", [1, -1])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_criterion_6_eigenvectors_nonzero(branch, n):
    probe = eigen_probe_w1a(branch, n)
    ok = probe.eigenvectors and probe.nonzero
    record(6, f"eigenvectors with nonzero eigenvalues (branch {branch}, n={n})", ok)
    assert ok


@pytest.mark.xfail(strict=True, reason="printed eigenvalues assume c(w1 (x) w2) = +theta; "
                                       "the module data gives -theta (see notes)")
@pytest.mark.parametrize("branch", [1, -1])
@pytest.mark.parametrize("n", [1, 2, 3])
def test_criterion_6_printed_eigenvalues(branch, n):
    probe = eigen_probe_w1a(branch, n)
    record(6, f"printed eigenvalue formulas (branch {branch}, n={n})", probe.ok,
           f"odd {probe.odd_measured} vs {probe.odd_value}")
    assert probe.ok


# --- 7 -------------------------------------------------------------------------


def test_criterion_7_dynkin():
    m1 = -ONE

    def cycle(n):
        q = [[ONE] * n for _ in range(n)]
        for i in range(n):
            q[i][i] = m1
            q[i][(i + 1) % n] = m1
        return q

    single = dynkin([[m1]])
    a2 = dynkin(diagonal_form(simple(W(1, -1), "p")))
    a2b = dynkin(diagonal_form(simple(W(-1, -1), "p")))
    parts = [
        ("single vertex -1 is A1", single.verdict == "finite" and single.components[0][0] == "A1"),
        ("W(b1,-1) is A2", all(d.verdict == "finite" and d.components[0][0] == "A2" for d in (a2, a2b))),
        ("triangle is infinite", dynkin(cycle(3)).verdict == "infinite"),
        ("square is infinite", dynkin(cycle(4)).verdict == "infinite"),
        ("q_ii = 1 is infinite", dynkin([[ONE, m1], [ONE, m1]]).verdict == "infinite"
         and dynkin([[ONE]]).verdict == "infinite"),
    ]
    for name, ok in parts:
        record(7, name, ok)
    assert all(ok for _n, ok in parts)


# --- 8 -------------------------------------------------------------------------


def _lift_ok(part, params, dim):
    t0 = time.time()
    a = build_lifting(params)
    rep = hopf_verify_lifting(a)
    ok = a.certified and a.dim == dim and rep.ok
    record(8, part, ok, f"dim {a.dim}, {time.time() - t0:.0f} s, "
                        + ", ".join(c.name for c in rep.checks if not c.ok))
    return ok


def test_criterion_8_standard_liftings():
    t0 = time.time()
    oks = [
        _lift_ok("A1(1,0,0,0) dim 16", LiftingParams("A1", (1, 0, 0, 0)), 16),
        _lift_ok("A1(1,1,1,1) with lambda, theta dim 128",
                 LiftingParams("A1", (1, 1, 1, 1), {"lambda[1,1]": 1, "theta[1,1]": "2 + i"}), 128),
        _lift_ok("A6(lambda) dim 512", LiftingParams("A6", (), {"lambda": "-3/2"}), 512),
        _lift_ok("A7(I7) dim 512",
                 LiftingParams("A7", (), {f"lambda{j}": j for j in range(1, 6)}), 512),
        _lift_ok("A4(1,1;I4) dim 256",
                 LiftingParams("A4", (1, 1), {"lambda1": 1, "lambda2": 2, "lambda[1,1]": 3}), 256),
    ]
    try:
        build_lifting(LiftingParams("A6", (), {"lambda": 1, "lambda3": 1}))
        rejected = False
    except NonConfluent:
        rejected = True
    record(8, "lambda3 deformation of A6 rejected", rejected)
    elapsed = time.time() - t0
    record(8, "runtime < 900 s", elapsed < 900, f"{elapsed:.0f} s")
    assert all(oks) and rejected and elapsed < 900


@pytest.mark.xfail(strict=True, reason="mu and zeta are forced to 0 by the overlaps z*q1*X1 and "
                                       "z*p1*Y1; only lambda and theta are free (see notes)")
def test_criterion_8_a1_all_four_scalars():
    scal = {"lambda[1,1]": 1, "mu[1,1]": 2, "zeta[1,1]": 3, "theta[1,1]": 5}
    try:
        a = build_lifting(LiftingParams("A1", (1, 1, 1, 1), scal))
        ok = a.dim == 128 and hopf_verify_lifting(a).ok
        detail = ""
    except NonConfluent as e:
        ok, detail = False, f"overlap {e.overlap}"
    record(8, "A1(1,1,1,1) generic in all four scalars", ok, detail)
    assert ok


@pytest.mark.xfail(strict=True, reason="the mu' deformation is confluent and passes every Hopf "
                                       "check, including the exhaustive one (see notes)")
def test_criterion_8_a4_mu_prime_rejected():
    try:
        a = build_lifting(LiftingParams("A4", (1, 1), {"mu_prime[1]": 1}))
        rejected = not hopf_verify_lifting(a, structure=False).ok
        detail = f"dim {a.dim}, all checks pass" if not rejected else ""
    except NonConfluent as e:
        rejected, detail = True, f"overlap {e.overlap}"
    record(8, "mu' deformation of A4 rejected", rejected, detail)
    assert rejected


# --- 9 -------------------------------------------------------------------------


@pytest.mark.parametrize("b1", [1, -1])
def test_criterion_9_squares(b1):
    ib = "i" if b1 == 1 else "(-i)"
    t = smash_truncated(simple(W(b1, -1), "p"), 8, names=["p1", "p2"])
    ok = check_identity(t, "p1 p1", f"(1/2)(1 + x y) | p1 p1 + ({ib}/2)(1 - x y) | p2 p2 + p1 p1 | 1")
    ok &= check_identity(t, "p2 p2", f"(1/2)(1 + x y) | p2 p2 - ({ib}/2)(1 - x y) | p1 p1 + p2 p2 | 1")
    record(9, f"Delta(p1^2), Delta(p2^2) for b1 = {b1}", ok)
    assert ok


_QUARTIC = "p1 p2 p1 p2 + p2 p1 p2 p1"


@pytest.mark.parametrize("b1", [1, -1])
def test_criterion_9_quartic_modulo_squares(b1):
    ib = "i" if b1 == 1 else "(-i)"
    ok = True
    for ideal in (["p1 p1", "p2 p2"], ["p1 p1 - (1 - x y)", f"p2 p2 - {ib} (1 - x y)"]):
        t = smash_truncated(simple(W(b1, -1), "p"), 8, ideal=ideal, names=["p1", "p2"])
        ok &= check_identity(t, _QUARTIC, f"x y | ({_QUARTIC}) + ({_QUARTIC}) | 1")
    record(9, f"quartic skew-primitive modulo the square relations (b1 = {b1})", ok)
    assert ok


@pytest.mark.xfail(strict=True, reason="the quartic is skew-primitive only modulo the square "
                                       "relations, not in the free truncation (see notes)")
@pytest.mark.parametrize("b1", [1, -1])
def test_criterion_9_quartic_free(b1):
    t = smash_truncated(simple(W(b1, -1), "p"), 8, names=["p1", "p2"])
    ok = check_identity(t, _QUARTIC, f"x y | ({_QUARTIC}) + ({_QUARTIC}) | 1")
    record(9, f"quartic skew-primitive in T(W)#H8 (b1 = {b1})", ok)
    assert ok


@pytest.mark.parametrize("elem,g", [("p1 q1 + q1 p1", "x"), ("p2 q2 + q2 p2", "y"),
                                    ("p1 q2 - q2 p1", "x y"), ("p2 q1 + q1 p2", "1")])
def test_criterion_9_omega6(elem, g):
    t = smash_truncated(direct_sum(simple(PairGG("y", "xy"), "p"), simple(PairGG("xy", "x"), "p")),
                        4, names=["p1", "p2", "q1", "q2"])
    ok = check_identity(t, elem, f"({elem}) | 1 + {g} | ({elem})")
    record(9, f"Omega6 Delta({elem})", ok)
    assert ok


def _omega7():
    return smash_truncated(direct_sum(simple(W(1, -1), "p"), simple(W(-1, -1), "p")), 4,
                           names=["p1", "p2", "q1", "q2"])


def test_criterion_9_omega7_p1q1():
    t = _omega7()
    ok = check_identity(t, "p1 q1 + q1 p1", "(x + y)/2 | (p1 q1 + q1 p1) + (p1 q1 + q1 p1) | 1"
                                            " + (i (x - y))/2 | (p2 q2 - q2 p2)")
    ok &= check_identity(t, "p2 q2 - q2 p2", "(x + y)/2 | (p2 q2 - q2 p2) + (p2 q2 - q2 p2) | 1"
                                             " - (i (x - y))/2 | (p1 q1 + q1 p1)")
    record(9, "Omega7 Delta(p1 q1 + q1 p1), Delta(p2 q2 - q2 p2)", ok)
    assert ok


@pytest.mark.xfail(strict=True, reason="the printed factor (1/2)[(1+xy) + i(1-xy)] is not "
                                       "group-like; the coproduct mixes in p2 q1 + q1 p2 (see notes)")
@pytest.mark.parametrize("elem,sign", [("p1 q2 + q2 p1", "+"), ("p2 q1 + q1 p2", "-")])
def test_criterion_9_omega7_p1q2_printed(elem, sign):
    ok = check_identity(_omega7(), elem,
                        f"(1/2)((1 + x y) {sign} i (1 - x y)) | ({elem}) + ({elem}) | 1")
    record(9, f"Omega7 Delta({elem}) as printed", ok)
    assert ok


# --- 10 ------------------------------------------------------------------------


def test_criterion_10_conjecture_probe():
    t0 = time.time()
    profs = {}
    for b1 in (1, -1):
        for which in ("xy,x", "y,xy"):
            profs[(b1, which)] = conjecture_probe(b1, which, 5)
    elapsed = time.time() - t0
    for b1 in (1, -1):
        a, b = profs[(b1, "xy,x")], profs[(b1, "y,xy")]
        record(10, f"b1 = {b1}: degree >= 5 and profiles equal",
               a.cutoff >= 5 and len(a.dims) == 6 and a.dims == b.dims, str(a.dims))
    no_claim = all(not p.finite and p.render().startswith("open(") for p in profs.values())
    record(10, "no finite-total claim", no_claim)
    record(10, "runtime <= 1800 s", elapsed <= 1800, f"{elapsed:.0f} s")
    assert all(p.dims == profs[(1, "xy,x")].dims for p in profs.values())
    assert no_claim and elapsed <= 1800
    # the table cell stays open too
    row = next(r for r in TABLE3 if r.open)
    assert row.dim is None
    assert parse(row.instances[0]).render() == row.instances[0]
