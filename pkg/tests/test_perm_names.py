import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import perms
from oracles import comp, inv, sign
from portcgd import perm as P
from portcgd.names import DerivedName, derived, dot, fresh_name, parse_name, rename_name


@given(perms())
def test_parity_matches_inversion_count(p):
    assert P.parity(p) == sign(p)


@given(st.integers(2, 6).flatmap(lambda n: st.tuples(perms(n), perms(n))))
def test_parity_is_multiplicative(ab):
    a, b = ab
    assert P.parity(P.compose(a, b)) == P.parity(a) * P.parity(b)
    assert P.compose(a, b) == comp(a, b)


@given(perms())
def test_inverse(p):
    assert P.inverse(p) == inv(p)
    assert P.compose(p, P.inverse(p)) == P.identity(len(p))


def test_gluing_and_rotation_counts():
    # (n+2)!/2 gluings and as many rotations
    for n in (1, 2, 3):
        size = n + 2
        assert len(P.odd_perms(size)) == len(P.even_perms(size)) == len(list(itertools.permutations(range(size)))) // 2
        assert P.even_perms(size)[0] == P.identity(size)


def test_transposition_and_cycle():
    assert P.transposition(4, 0, 1) == (1, 0, 2, 3)
    assert P.is_odd(P.transposition(5, 2, 4))
    assert P.cycle(4, 0, 1, 2) == (1, 2, 0, 3)
    assert P.is_even(P.cycle(4, 0, 1, 2))


def test_parse_perm_rejects_non_bijection():
    assert P.parse_perm("1,0,2") == (1, 0, 2)
    with pytest.raises(ValueError):
        P.parse_perm("0,0,2")


def test_derived_names_are_order_insensitive():
    a = derived(("u", 0), ("v", 2))
    b = derived(("v", 2), ("u", 0))
    assert a == b and hash(a) == hash(b)
    assert str(a) == "{u,v.2}"
    assert a != derived(("u", 1), ("v", 2))
    with pytest.raises(ValueError):
        DerivedName([])


@pytest.mark.parametrize("text", ["u", "{u}", "{u,v.2}", "{v.3,{u.1,w}}", "{{{a}.2}}"])
def test_name_round_trip(text):
    assert str(parse_name(text)) == text


def test_parse_sorts_parts():
    assert str(parse_name("{{u.1,w},v.3}")) == "{v.3,{u.1,w}}"


@pytest.mark.parametrize("bad", ["{u", "u v", "{}", "{u,}", "a}b"])
def test_bad_names(bad):
    with pytest.raises(ValueError):
        parse_name(bad)


def test_rename_acts_elementwise():
    n = derived(("u", 1), ("v", 0))
    assert rename_name(n, {"u": "x", "v": "y"}.__getitem__) == derived(("x", 1), ("y", 0))
    assert rename_name(dot(n, 2), lambda b: b.upper() if isinstance(b, str) else b) == dot(n, 2)


def test_fresh_name_skips_taken():
    assert fresh_name({"u_0", "u_1"}, "u") == ("u_2", 2)
    assert fresh_name(set(), "{a.1}")[0] == "a_1_0"
