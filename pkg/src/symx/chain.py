"""Permutation groups backed by a deterministic stabiliser chain.

The chain is built with Knuth's formulation of the Schreier-Sims method: each
level keeps its own generator list ``T_k`` (which generates the stabiliser of
the earlier base points), an orbit of the base point and explicit coset
representatives.  Points passed as ``base_hint`` are forced to be the first
base points, even when their orbit is trivial, so the pointwise stabiliser of
any prefix of the hint is a suffix of the chain.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from .perm import Permutation, _inv, _mul

__all__ = [
    "PermGroup",
    "AuxAction",
    "EnumerationBoundExceeded",
    "DEFAULT_ENUM_BOUND",
    "enumeration_bound",
    "build_chain",
    "contains",
    "orbit",
    "pointwise_stabiliser",
    "normal_closure",
    "commutator_subgroup",
    "kernel_on_aux",
    "stabiliser_on_aux",
    "enumerate_elements",
    "minimal_coset_rep",
]

DEFAULT_ENUM_BOUND = 10**6


def enumeration_bound() -> int:
    """Element-enumeration limit; ``SYMX_ENUM_BOUND`` overrides the default."""
    raw = os.environ.get("SYMX_ENUM_BOUND", "").strip()
    return int(raw) if raw else DEFAULT_ENUM_BOUND


class EnumerationBoundExceeded(RuntimeError):
    def __init__(self, order: int, bound: int):
        super().__init__(f"enumeration bound exceeded: group order {order} > bound {bound}")
        self.order = order
        self.bound = bound


class _Level:
    __slots__ = ("base", "gens", "orbit", "reps", "invs")

    def __init__(self, base: int, ident: tuple):
        self.base = base
        self.gens: list = []
        self.orbit = [base]
        self.reps = {base: ident}
        self.invs = {base: ident}


class _Chain:
    """Mutable chain used while building; frozen once wrapped in a PermGroup."""

    def __init__(self, degree: int, base_hint: Sequence[int] = ()):
        self.degree = degree
        self.ident = tuple(range(degree))
        self.levels: list[_Level] = []
        for b in base_hint:
            self.levels.append(_Level(b, self.ident))

    def sift(self, g: tuple, start: int = 0):
        levels = self.levels
        for k in range(start, len(levels)):
            lev = levels[k]
            beta = g[lev.base]
            if beta == lev.base:
                continue
            inv = lev.invs.get(beta)
            if inv is None:
                return g, k
            g = _mul(g, inv)
        return g, len(levels)

    def contains(self, g: tuple, start: int = 0) -> bool:
        h, k = self.sift(g, start)
        return k == len(self.levels) and h == self.ident

    def add(self, g: tuple) -> bool:
        """Extend the group by ``g``; returns False when ``g`` was already a member."""
        if self.contains(g):
            return False
        self._run(g)
        return True

    def _run(self, g: tuple) -> None:
        levels = self.levels
        ident = self.ident
        # Tasks: (True, k, g, known_outside) for "add g to level k",
        #        (False, k, tau, None)       for "close orbit of level k under tau".
        stack = [(True, 0, g, False)]
        while stack:
            is_add, k, x, known_outside = stack.pop()
            if is_add:
                if not known_outside and self.contains(x, k):
                    continue
                if k == len(levels):
                    moved = next(i for i in range(self.degree) if x[i] != i)
                    levels.append(_Level(moved, ident))
                lev = levels[k]
                lev.gens.append(x)
                if x[lev.base] == lev.base and len(lev.orbit) == 1:
                    stack.append((True, k + 1, x, True))
                    continue
                for beta in reversed(lev.orbit):
                    stack.append((False, k, _mul(lev.reps[beta], x), None))
            else:
                lev = levels[k]
                beta = x[lev.base]
                inv = lev.invs.get(beta)
                if inv is None:
                    lev.reps[beta] = x
                    lev.invs[beta] = _inv(x)
                    lev.orbit.append(beta)
                    for t in reversed(lev.gens):
                        stack.append((False, k, _mul(x, t), None))
                else:
                    residue = _mul(x, inv)
                    if residue != ident:
                        stack.append((True, k + 1, residue, False))


@dataclass(frozen=True)
class AuxAction:
    """Images of a group's generators acting on ``aux_size`` auxiliary points."""

    aux_size: int
    images: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.images)
        for row in rows:
            if sorted(row) != list(range(self.aux_size)):
                raise ValueError("aux action row is not a bijection of the auxiliary points")
        object.__setattr__(self, "images", rows)


class PermGroup:
    """A permutation group of fixed degree with an eagerly built stabiliser chain.

    Handles are read-only after construction.  ``order()`` is exact.
    """

    def __init__(self, generators: Iterable[Sequence[int]] = (), degree: int | None = None,
                 base_hint: Sequence[int] | None = None):
        gens = [tuple(int(v) for v in g) for g in generators]
        if degree is None:
            if not gens:
                raise ValueError("cannot infer the degree of a group with no generators")
            degree = len(gens[0])
        for g in gens:
            if len(g) != degree:
                raise ValueError(f"generator of degree {len(g)} in a group of degree {degree}")
            Permutation(g)  # validates bijectivity
        hint = _dedupe(base_hint or ())
        for b in hint:
            if not 0 <= b < degree:
                raise ValueError(f"base hint point {b} outside degree {degree}")
        chain = _Chain(degree, hint)
        for g in gens:
            if g != chain.ident:
                chain.add(g)
        self._init(degree, [Permutation._trusted(g) for g in gens], chain.levels)

    def _init(self, degree, generators, levels):
        self.degree = degree
        self.generators = tuple(generators)
        self._levels = levels
        self._nontrivial = [lev for lev in levels if len(lev.orbit) > 1]
        self._order = prod(len(lev.orbit) for lev in self._nontrivial)
        self._arrays = None

    @classmethod
    def _from_levels(cls, degree, levels, generators=None) -> PermGroup:
        self = cls.__new__(cls)
        if generators is None:
            generators = levels[0].gens if levels else ()
        self._init(degree, [Permutation._trusted(g) for g in generators], list(levels))
        return self

    @classmethod
    def trivial(cls, degree: int) -> PermGroup:
        return cls((), degree=degree)

    # -- basic queries -------------------------------------------------

    def order(self) -> int:
        return self._order

    def is_trivial(self) -> bool:
        return self._order == 1

    @property
    def base(self) -> list:
        return [lev.base for lev in self._nontrivial]

    @property
    def transversal_sizes(self) -> list:
        return [len(lev.orbit) for lev in self._nontrivial]

    @property
    def strong_generators(self) -> list:
        seen = set()
        out = []
        for lev in self._levels:
            for g in lev.gens:
                if g not in seen:
                    seen.add(g)
                    out.append(Permutation._trusted(g))
        return out

    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def contains(self, p: Sequence[int]) -> bool:
        p = tuple(p)
        if len(p) != self.degree:
            raise ValueError(f"degree mismatch: {len(p)} vs {self.degree}")
        levels = self._nontrivial
        for lev in levels:
            beta = p[lev.base]
            if beta == lev.base:
                continue
            inv = lev.invs.get(beta)
            if inv is None:
                return False
            p = _mul(p, inv)
        return all(i == x for i, x in enumerate(p))

    __contains__ = contains

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def same_group(self, other: PermGroup) -> bool:
        return (self.degree == other.degree and self._order == other._order
                and self.is_subgroup_of(other))

    def is_normal_in(self, parent: PermGroup) -> bool:
        return all(self.contains(n.conjugate(t)) for n in self.generators for t in parent.generators)

    def moved_points(self) -> list:
        return sorted({i for g in self.generators for i, x in enumerate(g) if i != x})

    # -- orbits and stabilisers ----------------------------------------

    def orbit(self, x: int) -> list:
        """Breadth-first orbit of ``x`` under the generators, in discovery order."""
        if not 0 <= x < self.degree:
            raise ValueError(f"point {x} outside degree {self.degree}")
        seen = {x}
        out = [x]
        for y in out:
            for g in self.generators:
                z = g[y]
                if z not in seen:
                    seen.add(z)
                    out.append(z)
        return out

    def orbits(self, domain: Iterable[int] | None = None) -> list:
        points = range(self.degree) if domain is None else domain
        seen = set()
        out = []
        for x in points:
            if x not in seen:
                orb = self.orbit(x)
                seen.update(orb)
                out.append(orb)
        return out

    def pointwise_stabiliser(self, points: Iterable[int]) -> PermGroup:
        pts = _dedupe(points)
        if not pts or self.is_trivial():
            return self
        prefix = [lev.base for lev in self._levels[:len(pts)]]
        if prefix == pts:
            return PermGroup._from_levels(self.degree, self._levels[len(pts):])
        chain = _Chain(self.degree, pts)
        for g in self.strong_generators:
            chain.add(tuple(g))
        return PermGroup._from_levels(self.degree, chain.levels[len(pts):])

    def stabiliser(self, x: int) -> PermGroup:
        return self.pointwise_stabiliser([x])

    # -- derived groups --------------------------------------------------

    def conjugate(self, a: Sequence[int]) -> PermGroup:
        """The group ``a^-1 G a``."""
        a = Permutation(a)
        return PermGroup([g.conjugate(a) for g in self.generators], degree=self.degree)

    def restrict(self, domain: Sequence[int]) -> PermGroup:
        """Image of the action on an invariant point list, relabelled ``0..len-1``."""
        index = {x: i for i, x in enumerate(domain)}
        if len(index) != len(domain):
            raise ValueError("domain has repeated points")
        gens = []
        for g in self.generators:
            try:
                gens.append([index[g[x]] for x in domain])
            except KeyError:
                raise ValueError("domain is not invariant under the group") from None
        return PermGroup(gens, degree=len(domain))

    def join(self, other: PermGroup) -> PermGroup:
        return PermGroup(list(self.generators) + list(other.generators), degree=self.degree)

    def normal_closure(self, seeds: Iterable[Sequence[int]]) -> PermGroup:
        return normal_closure(self, seeds)

    # -- canonical coset representatives ----------------------------------

    def minimal_coset_rep(self, g: Sequence[int]) -> Permutation:
        """Canonical element of the right coset ``H g``.

        Level by level, pick the representative that sends the base point to
        the smallest possible image.
        """
        g = tuple(g)
        if len(g) != self.degree:
            raise ValueError(f"degree mismatch: {len(g)} vs {self.degree}")
        for lev in self._nontrivial:
            best = min(lev.orbit, key=g.__getitem__)
            if best != lev.base:
                g = _mul(lev.reps[best], g)
        return Permutation._trusted(g)

    # -- enumeration -----------------------------------------------------

    def _chain_arrays(self):
        if self._arrays is None:
            n = self.degree
            levels = self._nontrivial
            depth = len(levels)
            width = max((len(lev.orbit) for lev in levels), default=1)
            bases = np.array([lev.base for lev in levels], dtype=_kernels.DTYPE)
            orbit_index = np.full((depth, n), -1, dtype=_kernels.DTYPE)
            trans = np.zeros((depth, width, n), dtype=_kernels.DTYPE)
            trans_inv = np.zeros((depth, width, n), dtype=_kernels.DTYPE)
            for d, lev in enumerate(levels):
                for j, beta in enumerate(lev.orbit):
                    orbit_index[d, beta] = j
                    trans[d, j] = lev.reps[beta]
                    trans_inv[d, j] = lev.invs[beta]
            sizes = [len(lev.orbit) for lev in levels]
            strides = np.array([prod(sizes[d + 1:]) for d in range(depth)], dtype=np.int64)
            self._arrays = (bases, orbit_index, trans, trans_inv, strides)
        return self._arrays

    def element_array(self, bound: int | None = None) -> np.ndarray:
        """All elements as rows, in transversal-product order (level 0 most significant)."""
        bound = enumeration_bound() if bound is None else bound
        if self._order > bound:
            raise EnumerationBoundExceeded(self._order, bound)
        _, _, trans, _, _ = self._chain_arrays()
        elems = np.arange(self.degree, dtype=_kernels.DTYPE)[None, :]
        for d in reversed(range(len(self._nontrivial))):
            reps = trans[d, :len(self._nontrivial[d].orbit)]
            elems = _kernels.expand_products(elems, np.ascontiguousarray(reps))
        return elems

    def rank_rows(self, rows: np.ndarray) -> np.ndarray:
        """Index of each row within :meth:`element_array`, -1 for non-members."""
        bases, orbit_index, _, trans_inv, strides = self._chain_arrays()
        return _kernels.sift_rank(np.ascontiguousarray(rows, dtype=_kernels.DTYPE),
                                  bases, orbit_index, trans_inv, strides)

    def enumerate_elements(self, bound: int | None = None) -> list:
        return [Permutation._trusted(tuple(int(v) for v in row))
                for row in self.element_array(bound)]

    def __repr__(self):
        return f"<PermGroup degree={self.degree} order={self._order} gens={len(self.generators)}>"


def _dedupe(points: Iterable[int]) -> list:
    seen = set()
    out = []
    for p in points:
        p = int(p)
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def group_from_rows(rows, degree: int) -> PermGroup:
    """Subgroup generated by a batch of elements, adding only non-members."""
    chain = _Chain(degree)
    gens = []
    for row in rows:
        g = tuple(int(v) for v in row)
        if chain.add(g):
            gens.append(g)
    return PermGroup._from_levels(degree, chain.levels, gens)


# -- functional surface -------------------------------------------------------

def build_chain(gens: Iterable[Sequence[int]], base_hint: Sequence[int] | None = None,
                degree: int | None = None) -> PermGroup:
    return PermGroup(gens, degree=degree, base_hint=base_hint)


def contains(g: PermGroup, p: Sequence[int]) -> bool:
    return g.contains(p)


def orbit(g: PermGroup, x: int) -> list:
    return g.orbit(x)


def pointwise_stabiliser(g: PermGroup, pts: Iterable[int]) -> PermGroup:
    return g.pointwise_stabiliser(pts)


def enumerate_elements(g: PermGroup, bound: int | None = None) -> list:
    return g.enumerate_elements(bound)


def minimal_coset_rep(h: PermGroup, g: Sequence[int]) -> Permutation:
    return h.minimal_coset_rep(g)


def normal_closure(g: PermGroup, seeds: Iterable[Sequence[int]], *, limit=None) -> PermGroup:
    """Smallest subgroup of ``g`` containing ``seeds`` and normalised by ``g``.

    ``limit`` is an optional predicate on the running order; closure stops early
    (returning a partial subgroup) as soon as it returns False.
    """
    seeds = [tuple(s) for s in seeds]
    for s in seeds:
        if len(s) != g.degree:
            raise ValueError(f"degree mismatch: {len(s)} vs {g.degree}")
        if not g.contains(s):
            raise ValueError(f"seed {Permutation(s)} does not lie in the group")
    chain = _Chain(g.degree)
    gens = []
    queue = []
    for s in seeds:
        if chain.add(s):
            gens.append(s)
            queue.append(s)
    parent = [tuple(t) for t in g.generators]
    parent_inv = [_inv(t) for t in parent]
    while queue:
        n = queue.pop(0)
        for t, tinv in zip(parent, parent_inv):
            c = _mul(_mul(tinv, n), t)
            if chain.add(c):
                gens.append(c)
                queue.append(c)
                if limit is not None and not limit(_chain_order(chain)):
                    return PermGroup._from_levels(g.degree, chain.levels, gens)
    return PermGroup._from_levels(g.degree, chain.levels, gens)


def _chain_order(chain: _Chain) -> int:
    return prod(len(lev.orbit) for lev in chain.levels)


def commutator_subgroup(a: PermGroup, b: PermGroup) -> PermGroup:
    """``[A, B]``: normal closure in ``<A, B>`` of the generator commutators."""
    if a.degree != b.degree:
        raise ValueError("degree mismatch")
    comms = []
    for g in a.generators:
        ginv = g.inverse()
        for h in b.generators:
            c = ginv * h.inverse() * g * h
            if not c.is_identity():
                comms.append(c)
    return normal_closure(a.join(b), comms)


def _extended_generators(g: PermGroup, act: AuxAction) -> list:
    if len(act.images) != len(g.generators):
        raise ValueError(f"aux action has {len(act.images)} rows for {len(g.generators)} generators")
    n = g.degree
    return [tuple(gen) + tuple(n + v for v in row) for gen, row in zip(g.generators, act.images)]


def stabiliser_on_aux(g: PermGroup, act: AuxAction, aux_points: Sequence[int]) -> PermGroup:
    """Elements of ``g`` whose induced action fixes each listed auxiliary point."""
    n = g.degree
    ext = _extended_generators(g, act)
    hint = [n + int(p) for p in _dedupe(aux_points)]
    chain = _Chain(n + act.aux_size, hint)
    for e in ext:
        chain.add(e)
    levels = chain.levels[len(hint):]
    if any(lev.base >= n for lev in levels):
        # some aux points are still moved; regenerate on the original domain
        gens = levels[0].gens if levels else ()
        return PermGroup([e[:n] for e in gens], degree=n)
    # every aux point is fixed below the hint prefix, so the truncated chain
    # is a valid chain on the original domain
    restricted = []
    for lev in levels:
        new = _Level(lev.base, tuple(range(n)))
        new.gens = [x[:n] for x in lev.gens]
        new.orbit = list(lev.orbit)
        new.reps = {b: r[:n] for b, r in lev.reps.items()}
        new.invs = {b: r[:n] for b, r in lev.invs.items()}
        restricted.append(new)
    return PermGroup._from_levels(n, restricted)


def kernel_on_aux(g: PermGroup, act: AuxAction) -> PermGroup:
    """Kernel of the action of ``g`` on auxiliary points given generator-wise.

    The generators are extended to ``range(degree) + aux`` and the pointwise
    stabiliser of all aux points is read off a chain with those points first.
    The action must be a homomorphism; this is not re-verified.
    """
    return stabiliser_on_aux(g, act, range(act.aux_size))
