from __future__ import annotations

import pytest
from groups import alt, cyclic, dihedral8, gen, klein, small_groups, sym
from hypothesis import given
from hypothesis import strategies as st
from oracles import BruteGroup

from symx.chain import EnumerationBoundExceeded, PermGroup
from symx.construction import wreath_product
from symx.props import (
    TRIVIAL,
    centraliser,
    classify_action,
    conjugacy_classes,
    fitting_and_fstar,
    invariant_signature,
    is_p_group,
    is_primitive,
    minimal_block,
    p_core,
    prime_divisors,
)


def test_is_p_group():
    assert is_p_group(PermGroup.trivial(3)) == TRIVIAL
    assert is_p_group(dihedral8()) == 2
    assert is_p_group(cyclic(3)) == 3
    assert is_p_group(sym(3)) is None
    assert prime_divisors(216, 12) == [2, 3]


def test_conjugacy_classes_s4():
    data = conjugacy_classes(sym(4))
    assert sorted(data.sizes) == [1, 3, 6, 6, 8]
    assert sum(data.sizes) == 24


def test_classifier_examples():
    c4 = classify_action(cyclic(4))
    assert c4.transitive and c4.semiprimitive and not c4.quasiprimitive and not c4.primitive
    d8 = classify_action(dihedral8())
    assert d8.transitive and not d8.semiprimitive and not d8.quasiprimitive
    s3 = classify_action(sym(3))
    assert s3.primitive and s3.quasiprimitive and s3.semiprimitive
    v4 = classify_action(klein())
    assert v4.semiregular and v4.semiprimitive and not v4.quasiprimitive


def test_classifier_intransitive_and_undetermined():
    g = gen(4, "(0 1)")
    cls = classify_action(g)
    assert not cls.transitive and cls.quasiprimitive is False and cls.semiprimitive is False
    big = classify_action(sym(6), bound=100)
    assert big.primitive and big.quasiprimitive is None
    assert big.as_dict()["quasiprimitive"] == "undetermined"


def test_classifier_on_domain():
    g = gen(6, "(0 1 2)", "(3 4)")
    cls = classify_action(g, domain=[0, 1, 2])
    assert cls.degree == 3 and cls.order == 3 and cls.primitive


def test_primitivity_and_blocks():
    assert is_primitive(sym(5)) and is_primitive(alt(5))
    assert not is_primitive(dihedral8())
    assert sorted(minimal_block(dihedral8(), 0, 2)) == [0, 2]
    assert sorted(minimal_block(sym(4), 0, 1)) == [0, 1, 2, 3]


def test_p_core_examples():
    assert p_core(dihedral8(), 2).order() == 8
    assert p_core(sym(3), 2).is_trivial()
    assert p_core(sym(3), 3).order() == 3
    assert p_core(sym(4), 2).same_group(klein())
    assert p_core(sym(4), 2).order() == 4
    assert p_core(sym(4), 5).is_trivial()


def test_centraliser_examples(c2c2m3):
    c3 = cyclic(3)
    assert centraliser(sym(3), c3).same_group(c3)
    assert centraliser(sym(3), PermGroup.trivial(3)).same_group(sym(3))
    c = centraliser(c2c2m3.H, c2c2m3.L)
    assert c.order() == 64
    on_x0 = c.restrict([0, 1, 2, 3])
    assert sorted(map(sorted, on_x0.orbits())) == [[0, 1], [2, 3]]
    cls = classify_action(on_x0)
    assert not cls.transitive and not cls.semiregular
    with pytest.raises(EnumerationBoundExceeded):
        centraliser(sym(9), cyclic(9), bound=1000)


def test_fitting_examples():
    d8 = fitting_and_fstar(dihedral8())
    assert d8.fitting.order() == 8 and d8.fstar_certified
    s3 = fitting_and_fstar(sym(3))
    assert s3.fitting.order() == 3 and s3.fstar_certified
    s4 = fitting_and_fstar(sym(4))
    assert s4.fitting.order() == 4 and s4.fstar_certified
    a5 = fitting_and_fstar(alt(5))
    assert a5.fitting.is_trivial() and not a5.fstar_certified and a5.fstar is None


def test_local_action_signature_matches_wreath(c2c2m3):
    from symx.local import LocalAnalysis
    la = LocalAnalysis.of(c2c2m3.spec)
    direct = wreath_product(cyclic(2), cyclic(2))
    assert invariant_signature(la.local_action).agrees(invariant_signature(direct))
    assert not invariant_signature(cyclic(4)).agrees(invariant_signature(direct))


def test_signature_partial_when_bound_hit():
    sig = invariant_signature(sym(7), bound=100)
    assert sig.partial and sig.cycle_types is None
    assert sig.agrees(invariant_signature(sym(7)))


@given(small_groups())
def test_classes_match_oracle(g):
    brute = BruteGroup(g.generators, g.degree)
    assert sorted(conjugacy_classes(g).sizes) == sorted(len(c) for c in brute.classes())


@given(small_groups(max_degree=6), st.sampled_from([2, 3, 5]))
def test_p_core_matches_oracle(g, p):
    brute = BruteGroup(g.generators, g.degree)
    core = p_core(g, p)
    want = brute.p_core(p)
    assert core.order() == len(want)
    assert all(core.contains(e) for e in brute.perms(want))


@given(small_groups(max_degree=6), st.data())
def test_centraliser_matches_oracle(g, data):
    brute = BruteGroup(g.generators, g.degree)
    picks = data.draw(st.lists(st.integers(0, len(brute) - 1), min_size=1, max_size=2))
    k = PermGroup([brute.elems[i] for i in picks], degree=g.degree)
    c = centraliser(g, k)
    want = brute.centraliser([brute.elems[i] for i in picks])
    assert c.order() == len(want)
    assert {tuple(e) for e in c.element_array()} == brute.perms(want)


@given(small_groups(max_degree=6))
def test_flags_match_oracle(g):
    brute = BruteGroup(g.generators, g.degree)
    cls = classify_action(g)
    quasi, semi = brute.flags()
    assert (cls.quasiprimitive, cls.semiprimitive) == (quasi, semi)
    if cls.primitive:
        assert cls.quasiprimitive


@given(small_groups(max_degree=6))
def test_fitting_is_normal_nilpotent_join(g):
    rep = fitting_and_fstar(g)
    for x in rep.fitting.generators:
        for y in g.generators:
            assert rep.fitting.contains(x.conjugate(y))
    assert rep.fitting.order() == _prod(c.order() for c in rep.cores.values())


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out
