"""Small named permutation groups and a hypothesis strategy for random ones."""

from __future__ import annotations

from hypothesis import strategies as st

from symx.chain import PermGroup
from symx.perm import Permutation, from_cycles


def gen(n, *cycles):
    return PermGroup([from_cycles(n, c) for c in cycles], degree=n)


def cyclic(n):
    return gen(n, "(" + " ".join(map(str, range(n))) + ")")


def sym(n):
    return gen(n, "(" + " ".join(map(str, range(n))) + ")", "(0 1)")


def alt(n):
    return PermGroup([from_cycles(n, f"(0 1 {k})") for k in range(2, n)], degree=n)


def dihedral8():
    return gen(4, "(0 1 2 3)", "(0 2)")


def klein():
    return gen(4, "(0 1)(2 3)", "(0 2)(1 3)")


@st.composite
def small_groups(draw, max_degree=7, max_gens=3):
    n = draw(st.integers(2, max_degree))
    k = draw(st.integers(1, max_gens))
    gens = [Permutation(draw(st.permutations(list(range(n))))) for _ in range(k)]
    return PermGroup(gens, degree=n)
