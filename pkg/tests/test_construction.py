from __future__ import annotations

import math

import pytest
from conftest import analysis, built
from groups import cyclic, sym

from symx.chain import PermGroup, group_from_rows
from symx.construction import (
    ConstructionParams,
    build_a,
    build_generators,
    build_groups,
    omega_layout,
    verify_lemma1,
    verify_lemma2,
    verify_theorem3,
    wreath_product,
)
from symx.local import LocalAnalysis
from symx.perm import from_cycles


def params(R, S, m):
    return ConstructionParams(R, S, m)


def test_layout_223():
    lay = omega_layout(params(cyclic(2), cyclic(2), 3))
    assert lay.n == 13
    assert [lay.X(j) for j in range(4)] == [[0, 1, 2, 3], [4, 5, 6, 7], [8, 9, 10, 11], [12]]
    assert [lay.Y(i, j) for j in range(3) for i in range(2)] == [
        [0, 1], [2, 3], [4, 5], [6, 7], [8, 9], [10, 11]]


def test_layout_323():
    lay = omega_layout(params(cyclic(3), cyclic(2), 3))
    assert lay.n == 20 and len(lay.X(3)) == 2
    for r in (2, 3, 4):
        assert len(omega_layout(params(cyclic(r), cyclic(2), 3)).X(3)) == r - 1


def test_param_validation():
    with pytest.raises(ValueError):
        params(cyclic(2), cyclic(2), 4)
    with pytest.raises(ValueError):
        params(cyclic(2), cyclic(2), 1)
    with pytest.raises(ValueError):
        params(PermGroup([from_cycles(3, "(0 1)")]), cyclic(2), 3)


def test_generator_examples():
    g = build_generators(params(cyclic(2), cyclic(2), 3))
    assert g.R_Y[(1, 2)] == [from_cycles(13, "(10 11)")]
    assert g.S_Omega == [from_cycles(13, "(0 2)(1 3)(4 6)(5 7)(8 10)(9 11)")]
    assert all(x.is_identity() for x in g.R_Xm)


def test_a_examples():
    assert build_a(params(cyclic(2), cyclic(2), 3)) == from_cycles(13, "(0 12)(2 6)(3 7)(4 8)(5 9)")
    a = build_a(params(cyclic(3), cyclic(3), 5))
    assert (a * a).is_identity()
    a323 = build_a(params(cyclic(3), cyclic(2), 3))
    assert all(a323[z] == z for z in (15, 16, 17))
    assert a323[2] == 2


def test_group_orders():
    out = built("c2c2m3")
    assert (out.H.order(), out.K.order(), out.L.order()) == (128, 32, 16)
    s3 = built("s3c2m3")
    assert s3.H.order() == 6**6 * 2 * 2 == 186624
    assert s3.L.order() == 6**4 * 2 == 2592
    for name in ("c2c2m3", "s3c2m3", "c3c3m3"):
        o = built(name)
        s, m = o.params.s, o.params.m
        assert o.V.order() == o.order_R ** (s * m) * o.params.S.order()


def test_structural_invariants(triple):
    a, H, K, L = triple.a, triple.H, triple.K, triple.L
    assert (a * a).is_identity()
    assert all(K.contains(k.conjugate(a)) for k in K.generators)
    assert all(L.contains(x.conjugate(h)) for x in L.generators for h in H.generators)
    assert L.is_subgroup_of(K) and K.is_subgroup_of(H)
    r, s, m = triple.params.r, triple.params.s, triple.params.m
    assert H.order() == K.order() * r * s
    inter = _intersection(L, L.conjugate(a))
    assert inter.order() == triple.order_R ** (s * (m - 2) + 1)


def _intersection(A, B):
    rows = A.element_array()
    return group_from_rows(rows[B.rank_rows(rows) >= 0], A.degree)


def test_lemma1(triple):
    rep = verify_lemma1(triple)
    assert rep.ok, rep.failures
    r, s = triple.params.r, triple.params.s
    assert rep.values["index"] == r * s
    assert rep.values["order_core"] == triple.L.order()


def test_lemma1_orbit_detail(c2c2m3):
    Ha = c2c2m3.H.conjugate(c2c2m3.a)
    assert sorted(Ha.orbit(1)) == [1, 6, 7, 12]
    assert set(Ha.orbit(1)) & {0, 1, 2, 3} == {1}


def test_lemma1_323():
    out = build_groups(params(cyclic(3), cyclic(2), 3))
    rep = verify_lemma1(out)
    assert rep.ok and rep.values["index"] == 6


def test_lemma2(triple):
    rep = verify_lemma2(triple)
    assert rep.ok, rep.failures
    n = triple.layout.n
    assert triple.G.order() in (math.factorial(n) // 2, math.factorial(n))


def test_lemma2_223_is_symmetric(c2c2m3):
    assert c2c2m3.G.order() == math.factorial(13)
    va = PermGroup(list(c2c2m3.V.generators) + [c2c2m3.a], degree=13)
    assert len(va.orbit(0)) == 13


def test_theorem3(triple):
    rep = verify_theorem3(triple, analysis(triple.params.name))
    assert rep.ok, rep.failures


def test_theorem3_values():
    assert analysis("c2c2m3").arc_kernel.order() == 8
    assert analysis("s3c2m3").arc_kernel.order() == 216
    assert analysis("c2c2m5").arc_kernel.order() == 128


def test_scaling_law():
    orders = []
    for m in (3, 5, 7):
        la = LocalAnalysis.of(build_groups(params(cyclic(2), cyclic(2), m)).spec)
        assert la.valency == 4
        orders.append(la.arc_kernel.order())
    assert orders == [2 ** (2 * (m - 2) + 1) for m in (3, 5, 7)]
    assert orders == sorted(set(orders))


def test_wreath_product():
    w = wreath_product(cyclic(2), cyclic(2))
    assert w.order() == 8 and w.degree == 4
    assert wreath_product(sym(3), cyclic(2)).order() == 72


def test_notes_record_generator_naming(c2c2m3):
    assert any("y_tau" in note for note in c2c2m3.notes)
