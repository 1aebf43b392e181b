import pytest

from h8nichols.cyclo import parse_number
from h8nichols.liftings import (DegreeOverflow, InfiniteNichols, LiftingParams, NonConfluent,
                                PresentationError, bosonize, build_lifting, check_identity,
                                hopf_verify_lifting, induced_maps, iso_check,
                                parse_presentation, smash_truncated)
from h8nichols.yd import Omega, OneDim, PairGG, W, direct_sum, realize, simple


def _sum(*labels):
    mods = [simple(lab, "p") for lab in labels]
    return mods[0] if len(mods) == 1 else direct_sum(*mods)


def _failed(rep):
    return [c.name for c in rep.checks if not c.ok]


# --- families ----------------------------------------------------------------------


def test_a1_lambda_theta_is_hopf():
    a = build_lifting(LiftingParams("A1", (1, 1, 1, 1), {"lambda[1,1]": 1, "theta[1,1]": 1}))
    assert a.dim == 128
    rep = hopf_verify_lifting(a)
    assert rep.ok, _failed(rep)


@pytest.mark.parametrize("key,overlap", [("mu[1,1]", "z*q1*X1"), ("zeta[1,1]", "z*p1*Y1")])
def test_a1_mu_zeta_are_obstructed(key, overlap):
    with pytest.raises(NonConfluent) as e:
        build_lifting(LiftingParams("A1", (1, 1, 1, 1), {key: 1}))
    assert e.value.overlap == overlap


def test_a1_non_strict_collects_failures():
    a = build_lifting(LiftingParams("A1", (1, 1, 1, 1), {"mu[1,1]": 1}), strict=False)
    assert not a.certified
    assert "z*q1*X1" in [f.name for f in a.failures]
    assert not hopf_verify_lifting(a).ok


@pytest.mark.parametrize("lam", ["0", "1", "-3/2"])
def test_a6_is_hopf(lam):
    a = build_lifting(LiftingParams("A6", (), {"lambda": lam}))
    assert a.dim == 512
    rep = hopf_verify_lifting(a)
    assert rep.ok, _failed(rep)


def test_a6_lambda3_rejected():
    with pytest.raises(NonConfluent) as e:
        build_lifting(LiftingParams("A6", (), {"lambda": 1, "lambda3": 1}))
    assert e.value.overlap == "x*q2*p1"


@pytest.mark.parametrize("family,counts,dim", [
    ("A1", (1, 1, 1, 1), 128), ("A2bos", (1, 1), 256), ("A4", (1, 1), 256),
    ("A6", (), 512), ("A7", (), 512)])
def test_zero_parameters_give_the_bosonization(family, counts, dim):
    a = build_lifting(LiftingParams(family, counts))
    labels = {
        "A1": [OneDim("i", "x"), OneDim("-i", "x"), OneDim("i", "y"), OneDim("-i", "y")],
        "A2bos": [OneDim("i", "x"), OneDim("-i", "x"), PairGG("xy", "x")],
        "A4": [OneDim("i", "x"), OneDim("i", "y"), W(1, -1)],
        "A6": [PairGG("y", "xy"), PairGG("xy", "x")],
        "A7": [W(1, -1), W(-1, -1)],
    }[family]
    b = bosonize(_sum(*labels), names=a.letters)
    assert a.dim == b.dim == dim
    rep = iso_check(a, b, {l: l for l in a.letters})
    assert rep.ok, _failed(rep)


def test_a7_dims_with_scalars():
    a = build_lifting(LiftingParams("A7", (), {f"lambda{j}": j for j in range(1, 6)}))
    assert a.dim == 512
    assert a.certified


def test_a4_excluded_deformations():
    base = {"lambda1": 1, "lambda2": 2, "lambda[1,1]": 3}
    assert build_lifting(LiftingParams("A4", (1, 1), base)).dim == 256
    # the single-rule shift breaks the coproduct
    sh = build_lifting(LiftingParams("A4", (1, 0), {"shift[1]": 1}))
    assert "Delta respects the relations" in _failed(hopf_verify_lifting(sh, structure=False))
    # the paired deformation survives every check (see the notes)
    mp = build_lifting(LiftingParams("A4", (1, 1), {"mu_prime[1]": 1}))
    assert mp.dim == 256
    rep = hopf_verify_lifting(mp, structure=False)
    assert rep.ok, _failed(rep)
    mu = build_lifting(LiftingParams("A4", (0, 1), {"mu[1]": 1}))
    assert hopf_verify_lifting(mu, structure=False).ok


def test_params_validation():
    with pytest.raises(ValueError):
        LiftingParams("A9")
    with pytest.raises(ValueError):
        LiftingParams("A1", (0, 0, 0, 0))
    with pytest.raises(ValueError):
        LiftingParams("A6", (), {"lambda7": 1})
    with pytest.raises(ValueError):
        LiftingParams("A4", (1,))
    p = LiftingParams("A4", (1, 1), {"lambda[1,1]": "1/2 + i"})
    assert LiftingParams.from_dict(p.to_dict()) == p
    assert p.get("lambda[1,1]") == parse_number("1/2 + i")
    assert p.get("lambda1") == parse_number("0")


# --- isomorphisms --------------------------------------------------------------------


@pytest.mark.parametrize("p,q", [((1, 0, 0, 0), (0, 0, 0, 1)), ((0, 1, 0, 0), (0, 0, 1, 0))])
def test_h1_h2_are_isomorphic(p, q):
    a = build_lifting(LiftingParams("A1", p))
    b = build_lifting(LiftingParams("A1", q))
    found = [tn for tn, im in induced_maps(a, b) if iso_check(a, b, im).ok]
    assert found


@pytest.mark.parametrize("p,q", [((1, 0, 0, 0), (0, 1, 0, 0)), ((1, 0, 0, 0), (0, 0, 1, 0))])
def test_non_isomorphic_pairs_have_no_induced_map(p, q):
    a = build_lifting(LiftingParams("A1", p))
    b = build_lifting(LiftingParams("A1", q))
    assert not [tn for tn, im in induced_maps(a, b) if iso_check(a, b, im).ok]


def test_omega2_omega3_bosonizations_are_isomorphic():
    b2 = bosonize(realize(Omega(2, (1, 0))))
    b3 = bosonize(realize(Omega(3, (0, 1))))
    assert any(iso_check(b2, b3, im).ok for _tn, im in induced_maps(b2, b3))


def test_iso_check_rejects_wrong_images():
    a = build_lifting(LiftingParams("A6", (), {"lambda": 1}))
    b = build_lifting(LiftingParams("A6", (), {"lambda": 1}))
    assert iso_check(a, b, {l: l for l in a.letters}).ok
    swapped = dict(zip(a.letters, reversed(a.letters)))
    assert not iso_check(a, b, swapped).ok


def test_bosonize_infinite_raises():
    with pytest.raises(InfiniteNichols):
        bosonize(simple(OneDim("1", "1"), "p"))


# --- truncated smash products ----------------------------------------------------------


def test_smash_truncation_basics():
    t = smash_truncated(simple(OneDim("i", "x"), "p"), 6, names=["p1"])
    assert t.dim == 7 * 8
    assert t.element("z p1") == t.element("i p1 x z")
    inv = t.check_invariants()
    assert inv.ok, _failed(inv)
    for h in range(8):
        assert t.pi(t.iota(h)) == {h: parse_number("1")}


def test_smash_z_anticommutes_with_w_generator():
    t = smash_truncated(simple(W(1, -1), "p"), 4, names=["p1", "p2"])
    # z p1 = -p1 z
    assert t.element("z p1") == t.element("-p1 z")
    assert t.check_invariants().ok


def test_degree_overflow():
    t = smash_truncated(simple(OneDim("i", "x"), "p"), 3, names=["p1"])
    with pytest.raises(DegreeOverflow):
        t.element("p1 p1 p1 p1")


def test_truncation_bound():
    with pytest.raises(ValueError):
        smash_truncated(simple(OneDim("i", "x"), "p"), 1)


@pytest.mark.parametrize("b1", [1, -1])
def test_squares_coproducts(b1):
    ib = "i" if b1 == 1 else "(-i)"
    t = smash_truncated(simple(W(b1, -1), "p"), 8, names=["p1", "p2"])
    assert check_identity(t, "p1 p1",
                          f"(1/2)(1 + x y) | p1 p1 + ({ib}/2)(1 - x y) | p2 p2 + p1 p1 | 1")
    assert check_identity(t, "p2 p2",
                          f"(1/2)(1 + x y) | p2 p2 - ({ib}/2)(1 - x y) | p1 p1 + p2 p2 | 1")
    assert not check_identity(t, "p1 p1", "x y | p1 p1 + p1 p1 | 1")


@pytest.mark.parametrize("b1", [1, -1])
def test_quartic_primitive_modulo_squares(b1):
    r = "p1 p2 p1 p2 + p2 p1 p2 p1"
    expected = f"x y | ({r}) + ({r}) | 1"
    free = smash_truncated(simple(W(b1, -1), "p"), 8, names=["p1", "p2"])
    assert not check_identity(free, r, expected)
    quot = smash_truncated(simple(W(b1, -1), "p"), 8, ideal=["p1 p1", "p2 p2"], names=["p1", "p2"])
    assert check_identity(quot, r, expected)


@pytest.fixture(scope="module")
def omega7():
    return smash_truncated(_sum(W(1, -1), W(-1, -1)), 4, names=["p1", "p2", "q1", "q2"])


def test_omega7_coproducts(omega7):
    t = omega7
    assert check_identity(t, "p1 q1 + q1 p1",
                          "(x + y)/2 | (p1 q1 + q1 p1) + (p1 q1 + q1 p1) | 1"
                          " + (i (x - y))/2 | (p2 q2 - q2 p2)")
    assert check_identity(t, "p2 q2 - q2 p2",
                          "(x + y)/2 | (p2 q2 - q2 p2) + (p2 q2 - q2 p2) | 1"
                          " - (i (x - y))/2 | (p1 q1 + q1 p1)")
    # degree-two mixed elements pair up with each other
    assert check_identity(t, "p1 q2 + q2 p1",
                          "(1/2)(1 + x y) | (p1 q2 + q2 p1) + (i/2)(1 - x y) | (p2 q1 + q1 p2)"
                          " + (p1 q2 + q2 p1) | 1")
    assert check_identity(t, "p2 q1 + q1 p2",
                          "(1/2)(1 + x y) | (p2 q1 + q1 p2) - (i/2)(1 - x y) | (p1 q2 + q2 p1)"
                          " + (p2 q1 + q1 p2) | 1")


def test_omega7_single_term_form_fails(omega7):
    assert not check_identity(omega7, "p1 q2 + q2 p1",
                              "(1/2)((1 + x y) + i (1 - x y)) | (p1 q2 + q2 p1)"
                              " + (p1 q2 + q2 p1) | 1")


@pytest.mark.parametrize("elem,g", [("p1 q1 + q1 p1", "x"), ("p2 q2 + q2 p2", "y"),
                                    ("p1 q2 - q2 p1", "x y"), ("p2 q1 + q1 p2", "1")])
def test_omega6_skew_primitives(elem, g):
    t = smash_truncated(_sum(PairGG("y", "xy"), PairGG("xy", "x")), 4,
                        names=["p1", "p2", "q1", "q2"])
    assert check_identity(t, elem, f"({elem}) | 1 + {g} | ({elem})")


def test_omega1_square_primitive():
    t = smash_truncated(_sum(OneDim("i", "x"), OneDim("-i", "x"), OneDim("i", "y"),
                             OneDim("-i", "y")), 4, names=["X", "Y", "p", "q"])
    assert check_identity(t, "X X", "X X | 1 + 1 | X X")
    assert not check_identity(t, "X Y", "X Y | 1 + 1 | X Y")


# --- text presentations -------------------------------------------------------------


def test_text_round_trip():
    a = build_lifting(LiftingParams("A6", (), {"lambda": "-3/2"}))
    b = parse_presentation(a.to_text())
    assert b.dim == a.dim
    assert b.letters == a.letters
    assert iso_check(a, b, {l: l for l in a.letters}).ok


def test_presentation_errors():
    with pytest.raises(PresentationError):
        parse_presentation("name: A\n")
    with pytest.raises(PresentationError):
        parse_presentation("letters: a\nbogus line\n")
    with pytest.raises(PresentationError):
        parse_presentation("letters: a\nrel: x a = -a x\nrel: y a = -a y\n")


def test_graded_dims_of_bosonization():
    b = bosonize(simple(W(1, -1), "p"), names=["p1", "p2"])
    assert b.dim == 64
    assert sum(b.graded_dims()) == 64
