import pytest
from hypothesis import given, settings, strategies as st

from h8nichols.expr import ExprError, parse, to_module

_ATOMS = (
    [f"M({b},{g})" for b in ("1", "-1") for g in ("1", "xy")]
    + [f"M({b},{g})" for b in ("i", "-i") for g in ("x", "y")]
    + ["M2(1,y)", "M2(x,1)", "M2(xy,x)", "M2(y,xy)", "P1xy", "Pxy"]
    + [f"W({a},{b})" for a in ("1", "-1") for b in ("1", "-1")]
    + ["W1(s2p)", "W1(s2m)", "W2(s2p)", "W2(s2m)"]
    + ["Omega1(1,0,2,0)", "Omega2(1,0)", "Omega6", "Omega7"]
)

terms = st.tuples(st.integers(1, 3), st.sampled_from(_ATOMS))


def _text(ts):
    return " + ".join(a if k == 1 else f"{k}*{a}" for k, a in ts)


@settings(max_examples=50, deadline=None)
@given(st.lists(terms, min_size=1, max_size=4))
def test_render_round_trip(ts):
    e = parse(_text(ts))
    assert e.render() == _text(ts)
    assert parse(e.render()) == e
    assert len(e.labels()) == sum(k for k, _a in ts)


def test_whitespace_is_ignored():
    assert parse(" M( i , x )+2 * M(-i,y) ") == parse("M(i,x) + 2*M(-i,y)")


def test_dimension_of_a_sum():
    m = to_module("M(i,x) + 2*M(-i,y)")
    assert m.dim == 3
    assert to_module("W(1,-1) + M2(xy,x)").dim == 4
    assert to_module("Omega7").dim == 4


@pytest.mark.parametrize("text,needle", [
    ("M(2,x)", "b must be one of"),
    ("M(i,q)", "g must be one of"),
    ("Foo(1)", "unknown module"),
    ("W(i,1)", "b1, b2 must be 1 or -1"),
    ("W1(s3)", "a must be s2p or s2m"),
    ("0*M(i,x)", "multiplicity must be positive"),
    ("-M(i,x)", "multiplicity must be positive"),
    ("M(i,x) +", "expected a module name"),
    ("M(i)", "takes 2 arguments"),
    ("M(i,x) M(i,y)", "unexpected"),
    ("Omega2(1,a)", "non-negative integers"),
    ("", "empty expression"),
])
def test_errors(text, needle):
    with pytest.raises(ExprError) as e:
        parse(text)
    assert needle in str(e.value)


def test_error_column():
    with pytest.raises(ExprError) as e:
        parse("M(2,x)")
    assert e.value.pos == 2
    assert "column 3" in str(e.value)


def test_invalid_pair_label():
    # M(1,x) has no simple module with this b and g
    with pytest.raises(ExprError):
        parse("M(1,x)")
