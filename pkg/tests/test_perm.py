from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symx.perm import CycleParseError, Permutation, compose, element_order, from_cycles, identity, support

A223 = "(0 12)(2 6)(3 7)(4 8)(5 9)"


@st.composite
def perms(draw, n=None):
    n = n or draw(st.integers(1, 12))
    return Permutation(draw(st.permutations(list(range(n)))))


def test_compose_examples():
    assert compose(from_cycles(3, "(0 1)"), identity(3)) == from_cycles(3, "(0 1)")
    assert compose(from_cycles(3, "(0 1)"), from_cycles(3, "(1 2)")) == from_cycles(3, "(0 2 1)")
    a = from_cycles(13, A223)
    assert (a * a).is_identity()


def test_compose_degree_mismatch():
    with pytest.raises(ValueError):
        compose(identity(3), identity(4))


def test_from_cycles_examples():
    assert list(from_cycles(4, "(0 1)(2 3)")) == [1, 0, 3, 2]
    assert from_cycles(3, "()") == identity(3)
    assert from_cycles(3, "") == identity(3)
    assert from_cycles(5, "(0,1,2)") == from_cycles(5, "(0 1 2)")


@pytest.mark.parametrize("text,pos", [
    ("(0 1)(1 2)", 6),
    ("(0 5)", 3),
    ("(0 (1))", 3),
    ("0 1)", 0),
    ("(0 1", 4),
    ("(0 x)", 3),
    ("(0 1))", 5),
])
def test_from_cycles_errors(text, pos):
    with pytest.raises(CycleParseError) as info:
        from_cycles(4, text)
    assert info.value.position == pos


def test_element_order_and_support():
    assert element_order(identity(4)) == 1
    assert element_order(from_cycles(5, "(0 1 2)(3 4)")) == 6
    a = from_cycles(13, A223)
    assert element_order(a) == 2
    assert support(identity(5)) == frozenset()
    assert support(a) == {0, 2, 3, 4, 5, 6, 7, 8, 9, 12}
    assert set(range(13)) - support(a) == {1, 10, 11}


def test_canonical_text():
    p = Permutation([2, 0, 1, 4, 3])
    assert p.to_cycles() == "(0 2 1)(3 4)"
    assert str(identity(2)) == "()"
    assert from_cycles(13, A223).to_cycles() == A223


def test_invalid_images():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
    with pytest.raises(ValueError):
        Permutation([])


@given(perms())
def test_inverse_property(p):
    assert (p * p.inverse()).is_identity()
    assert (p.inverse() * p).is_identity()


@given(perms())
def test_cycle_round_trip(p):
    assert from_cycles(len(p), p.to_cycles()) == p


@given(perms())
def test_order_is_exact(p):
    k = p.order()
    assert (p ** k).is_identity()
    assert all(not (p ** j).is_identity() for j in range(1, k))


@given(st.data())
def test_right_action(data):
    n = data.draw(st.integers(1, 9))
    p, q = data.draw(perms(n)), data.draw(perms(n))
    r = p * q
    assert all(r[x] == q[p[x]] for x in range(n))
    assert p.conjugate(q) == q.inverse() * p * q


@given(perms())
def test_sign_is_multiplicative_with_itself(p):
    assert (p * p).sign() == 1
    assert p.sign() == (-1) ** sum(len(c) - 1 for c in p.cycles())
