import random

import pytest
from hypothesis import given, settings, strategies as st

from h8nichols.cyclo import I, ONE, ZERO, CycloMatrix
from h8nichols.hopf import automorphisms, h8
from h8nichols.yd import (OneDim, Omega, OutsideCatalog, PairGG, W, W1, W2, YdModule,
                          all_simple_labels, decompose, direct_sum, dump_yd, hom_space,
                          is_isomorphic, load_yd, radford, realize, simple, twist, v1_module,
                          v2_module, verify_yd)
from h8nichols.yd import submodule

LABELS = all_simple_labels()
SIMPLES = [simple(lab) for lab in LABELS]
TAUS = automorphisms()
H = h8()


def test_catalog_size_and_dims():
    assert len(LABELS) == 22
    assert len({lab.render() for lab in LABELS}) == 22
    assert sorted(m.dim for m in SIMPLES) == [1] * 8 + [2] * 14


@pytest.mark.parametrize("lab", LABELS, ids=lambda lab: lab.render())
def test_simple_passes_yd_axioms(lab):
    rep = verify_yd(simple(lab))
    assert rep.ok, rep.summary()


@pytest.mark.parametrize("lab", LABELS, ids=lambda lab: lab.render())
def test_p_basis_is_the_same_module(lab):
    assert verify_yd(simple(lab, "p")).ok
    assert is_isomorphic(simple(lab), simple(lab, "p"))


def test_schur_and_pairwise_distinct():
    for i, a in enumerate(SIMPLES):
        for j, b in enumerate(SIMPLES):
            assert len(hom_space(a, b)) == (1 if i == j else 0), (LABELS[i], LABELS[j])


def test_invalid_labels():
    with pytest.raises(ValueError):
        OneDim("i", "1")
    with pytest.raises(ValueError):
        PairGG("1", "1")


def test_one_dim_data():
    m = simple(OneDim("i", "x"))
    assert m.act[H.index("z")].to_dense() == [[I]]
    assert m.coaction(0) == {(H.index("x"), 0): ONE}


def test_pair_gg_matrices():
    m = simple(PairGG("xy", "x"))
    assert m.act[H.index("x")].to_dense() == [[ONE, ZERO], [ZERO, -ONE]]
    assert m.act[H.index("z")].to_dense() == [[ZERO, ONE], [ONE, ZERO]]


def test_w_module_data():
    m = simple(W(1, -1))
    c = (ONE - I) * (-1) / 2
    assert m.act[H.index("z")].to_dense() == [[c, c], [-c, c]]
    # rho(w1) = (1+y)z/2 (x) w1 + (1-y)z/2 (x) w2
    z, yz = H.index("z"), H.index("yz")
    half = ONE / 2
    assert m.coaction(0) == {(z, 0): half, (yz, 0): half, (z, 1): half, (yz, 1): -half}


def test_mutated_coaction_fails():
    m = simple(W(1, -1))
    coact = []
    for C in m.coact:
        rows = C.to_dense()
        coact.append(CycloMatrix.from_dense([rows[1], rows[0]]))
    bad = YdModule(m.act, coact, "swapped")
    assert not verify_yd(bad).ok


@pytest.mark.parametrize("lab", LABELS[::3], ids=lambda lab: lab.render())
def test_random_single_entry_mutations_fail(lab):
    rng = random.Random(lab.render())
    m = simple(lab)
    d = m.dim
    for _ in range(10):
        act = [A.copy() for A in m.act]
        coact = [C.copy() for C in m.coact]
        target = rng.choice([act, coact])
        k = rng.randrange(1, 8) if target is act else rng.randrange(8)
        i, j = rng.randrange(d), rng.randrange(d)
        M = target[k]
        M.set(i, j, M[i, j] + ONE)
        assert not verify_yd(YdModule(act, coact, "mutant")).ok


def test_direct_sum_and_realize():
    s = direct_sum(simple(W(1, -1)), simple(OneDim("i", "x")))
    assert s.dim == 3 and verify_yd(s).ok
    o6 = realize(Omega(6, ()))
    assert o6.dim == 4 and verify_yd(o6).ok
    assert decompose(o6) == {PairGG("xy", "x"): 1, PairGG("y", "xy"): 1}
    assert decompose(realize(Omega(1, (1, 0, 0, 0)))) == {OneDim("i", "x"): 1}
    assert realize(Omega(7, ())).dim == 4


@settings(max_examples=25, deadline=None)
@given(st.lists(st.sampled_from(range(22)), min_size=1, max_size=3))
def test_decompose_is_additive(idx):
    mods = [SIMPLES[i] for i in idx]
    m = mods[0] if len(mods) == 1 else direct_sum(*mods)
    expect = {}
    for i in idx:
        expect[LABELS[i]] = expect.get(LABELS[i], 0) + 1
    assert decompose(m) == expect


def test_decompose_outside_catalog():
    # a module whose coaction is zero is not a comodule; its hom spaces do not fill it
    m = simple(OneDim("i", "x"))
    broken = YdModule(m.act, [CycloMatrix.zeros(1, 1) for _ in range(8)], "broken")
    with pytest.raises(OutsideCatalog):
        decompose(broken)


def test_twist_identity_is_verbatim():
    for m in SIMPLES[:6]:
        t = twist(m, TAUS["tau1"])
        assert all(a == b for a, b in zip(t.act, m.act))
        assert all(a == b for a, b in zip(t.coact, m.coact))


def test_twist_preserves_braiding_and_permutes_simples():
    for lab, m in zip(LABELS, SIMPLES):
        for name, tau in TAUS.items():
            t = twist(m, tau)
            assert verify_yd(t).ok
            assert t.braid_matrix() == m.braid_matrix(), (lab, name)
            dec = decompose(t)
            assert list(dec.values()) == [1], (lab, name)


def test_twist_examples():
    t = twist(simple(OneDim("i", "x")), TAUS["tau3"])
    assert len(hom_space(t, simple(OneDim("-i", "y")))) == 1
    t = twist(simple(W(1, -1)), TAUS["tau3"])
    assert is_isomorphic(t, simple(W(-1, -1)))


def test_radford_dimensions():
    for L in (v1_module(1), v1_module(-1), v1_module(I), v1_module(-I)):
        r = radford(L)
        assert r.dim == 8 and verify_yd(r).ok
    r2 = radford(v2_module())
    assert r2.dim == 16 and verify_yd(r2).ok


def _z_span(b):
    r = radford(v1_module(b))
    vecs = []
    for k in (4, 5, 6, 7):
        v = [ZERO] * 8
        v[k] = ONE
        vecs.append(v)
    return submodule(r, vecs, f"zspan({b})")


@pytest.mark.parametrize("b,expect", [
    (1, [W(1, 1), W(-1, 1)]), (-1, [W(1, -1), W(-1, -1)]),
    (I, [W(1, -1), W(-1, 1)]), (-I, [W(1, 1), W(-1, -1)]),
])
def test_radford_z_span(b, expect):
    span = _z_span(b)
    assert verify_yd(span).ok
    assert decompose(span) == {lab: 1 for lab in expect}


def test_hom_into_z_span():
    s = direct_sum(simple(W(1, -1)), simple(W(-1, -1)))
    assert len(hom_space(s, _z_span(-1))) == 2


def test_z_action_on_radford_unit_vector():
    for b in (ONE, -ONE):
        r = radford(v1_module(b))
        x, y = H.el("x"), H.el("y")
        one = H.one()
        b2 = b * b
        expect = ((one + x + b2 * (one - x)) * (one + y + b2 * (one - y))) * (b / 4)
        got = r.act[H.index("z")].apply({0: ONE})
        assert got == expect.v


def test_radford_coverage():
    seen = set()
    for L in (v1_module(1), v1_module(-1), v1_module(I), v1_module(-I), v2_module()):
        m = radford(L)
        dec = decompose(m)
        assert sum(k * simple(lab).dim for lab, k in dec.items()) == m.dim
        seen |= set(dec)
    assert seen == set(LABELS)
    dec2 = decompose(radford(v2_module()))
    for br in (1, -1):
        assert dec2.get(W1(br), 0) >= 1 and dec2.get(W2(br), 0) >= 1


def test_serialization_roundtrip():
    for m in SIMPLES[::4]:
        text = dump_yd(m)
        back = load_yd(text)
        assert dump_yd(back) == text
        assert back.braid_matrix() == m.braid_matrix()
