"""Structural tests on permutation groups and their characteristic subgroups."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import _kernels
from .chain import EnumerationBoundExceeded, PermGroup, group_from_rows, normal_closure
from .perm import Permutation, _inv

__all__ = [
    "TRIVIAL",
    "ActionClass",
    "FittingReport",
    "Signature",
    "classify_action",
    "conjugacy_classes",
    "p_core",
    "centraliser",
    "fitting_and_fstar",
    "is_p_group",
    "prime_divisors",
    "minimal_block",
    "is_primitive",
    "invariant_signature",
]

TRIVIAL = "trivial"


def _primes_upto(n: int) -> list:
    sieve = [True] * (n + 1)
    out = []
    for p in range(2, n + 1):
        if sieve[p]:
            out.append(p)
            for q in range(p * p, n + 1, p):
                sieve[q] = False
    return out


def prime_divisors(order: int, degree: int) -> list:
    """Primes dividing ``order``; all are at most ``degree`` since order divides degree!."""
    return [p for p in _primes_upto(max(degree, 2)) if order % p == 0]


def is_p_group(g: PermGroup):
    """The prime ``p`` when ``|g| = p^k`` (k >= 1), ``TRIVIAL`` for the trivial group, else None.

    The trivial group counts as a p-group for every prime.
    """
    order = g.order()
    if order == 1:
        return TRIVIAL
    primes = prime_divisors(order, g.degree)
    if len(primes) != 1:
        return None
    p = primes[0]
    while order % p == 0:
        order //= p
    return p if order == 1 else None


def _is_power_of(order: int, p: int) -> bool:
    while order % p == 0:
        order //= p
    return order == 1


# -- conjugacy classes -------------------------------------------------------

@dataclass
class ClassData:
    elements: np.ndarray   # rows in transversal-product order
    labels: np.ndarray     # class label per element
    reps: list             # index of the first element of each class, ascending
    sizes: list
    orders: np.ndarray     # element order per element


def conjugacy_classes(g: PermGroup, bound: int | None = None) -> ClassData:
    elems = g.element_array(bound)
    size = elems.shape[0]
    rows = []
    cols = []
    for gen in g.generators:
        gi = np.asarray(gen, dtype=_kernels.DTYPE)
        ginv = np.asarray(_inv(gen), dtype=_kernels.DTYPE)
        ranks = g.rank_rows(_kernels.conjugate_rows(elems, gi, ginv))
        rows.append(np.arange(size))
        cols.append(ranks)
    if rows:
        r = np.concatenate(rows)
        c = np.concatenate(cols)
        graph = coo_matrix((np.ones(r.size, dtype=np.int8), (r, c)), shape=(size, size))
        _, labels = connected_components(graph, directed=True, connection="weak")
    else:
        labels = np.zeros(size, dtype=np.int64)
    first = np.full(labels.max() + 1, size, dtype=np.int64)
    np.minimum.at(first, labels, np.arange(size))
    reps = sorted(int(i) for i in first)
    counts = np.bincount(labels)
    sizes = [int(counts[labels[i]]) for i in reps]
    return ClassData(elems, labels, reps, sizes, _kernels.element_orders(elems))


def _row_perm(row) -> Permutation:
    return Permutation._trusted(tuple(int(v) for v in row))


# -- blocks and primitivity -------------------------------------------------

def minimal_block(g: PermGroup, x: int, y: int) -> list:
    """Smallest block of imprimitivity containing ``x`` and ``y`` (``g`` transitive)."""
    parent = list(range(g.degree))

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    queue = [(x, y)]
    parent[find(y)] = find(x)
    while queue:
        u, v = queue.pop()
        for gen in g.generators:
            a, b = find(gen[u]), find(gen[v])
            if a != b:
                parent[b] = a
                queue.append((gen[u], gen[v]))
    root = find(x)
    return [z for z in range(g.degree) if find(z) == root]


def _is_transitive(g: PermGroup) -> bool:
    return len(g.orbit(0)) == g.degree


def is_primitive(g: PermGroup) -> bool:
    if not _is_transitive(g):
        return False
    return all(len(minimal_block(g, 0, y)) == g.degree for y in range(1, g.degree))


def _block_sizes(g: PermGroup) -> tuple:
    sizes = set()
    for y in range(1, g.degree):
        size = len(minimal_block(g, 0, y))
        if size < g.degree:
            sizes.add(size)
    return tuple(sorted(sizes))


# -- action classification --------------------------------------------------

@dataclass(frozen=True)
class ActionClass:
    transitive: bool
    semiregular: bool
    primitive: bool
    quasiprimitive: bool | None   # None = undetermined (enumeration bound hit)
    semiprimitive: bool | None
    degree: int
    order: int

    def __post_init__(self):
        if self.primitive:
            assert self.quasiprimitive in (True, None)
        if self.quasiprimitive:
            assert self.semiprimitive in (True, None)
        if self.semiregular and self.transitive:
            assert self.order == self.degree

    @property
    def transitive_or_semiregular(self) -> bool:
        return self.transitive or self.semiregular

    def as_dict(self) -> dict:
        return {
            "transitive": self.transitive,
            "semiregular": self.semiregular,
            "primitive": self.primitive,
            "quasiprimitive": _tri(self.quasiprimitive),
            "semiprimitive": _tri(self.semiprimitive),
            "degree": self.degree,
            "order": str(self.order),
        }


def _tri(flag):
    return "undetermined" if flag is None else flag


def _image(g: PermGroup, domain: Sequence[int] | None) -> PermGroup:
    if domain is None or list(domain) == list(range(g.degree)):
        return g
    return g.restrict(list(domain))


def classify_action(g: PermGroup, domain: Sequence[int] | None = None,
                    bound: int | None = None) -> ActionClass:
    """Classify the action of ``g`` on an invariant point list (default: all points).

    Quasiprimitivity uses normal closures of prime-order class representatives;
    semiprimitivity uses those that fix a point.
    """
    img = _image(g, domain)
    degree, order = img.degree, img.order()
    transitive = _is_transitive(img)
    semiregular = all(len(orb) == order for orb in img.orbits())
    primitive = transitive and (degree <= 2 or is_primitive(img))
    quasi = semi = False
    if transitive:
        try:
            classes = conjugacy_classes(img, bound)
        except EnumerationBoundExceeded:
            quasi = semi = None
        else:
            quasi = semi = True
            for idx in classes.reps:
                o = int(classes.orders[idx])
                if prime_divisors(o, degree) != [o]:
                    continue
                row = classes.elements[idx]
                closure_transitive = None
                fixes_point = bool(np.any(row == np.arange(degree)))
                if quasi or (semi and fixes_point):
                    closure = normal_closure(img, [_row_perm(row)])
                    closure_transitive = _is_transitive(closure)
                if not closure_transitive:
                    quasi = False
                    if fixes_point:
                        semi = False
                if not quasi and not semi:
                    break
    if primitive and quasi is False:
        raise AssertionError("primitive group classified as not quasiprimitive")
    return ActionClass(transitive, semiregular, primitive, quasi, semi, degree, order)


# -- characteristic subgroups ------------------------------------------------

def p_core(g: PermGroup, p: int, bound: int | None = None) -> PermGroup:
    """``O_p(g)``, the largest normal p-subgroup.

    Joins the normal closures of p-element class representatives whose closure
    is a p-group.
    """
    order = g.order()
    if order % p:
        return PermGroup.trivial(g.degree)
    if _is_power_of(order, p):
        return g
    classes = conjugacy_classes(g, bound)
    core = PermGroup.trivial(g.degree)
    for idx in classes.reps:
        o = int(classes.orders[idx])
        if o == 1 or not _is_power_of(o, p):
            continue
        e = _row_perm(classes.elements[idx])
        if core.contains(e):
            continue
        seeds = list(core.generators) + [e]
        cand = normal_closure(g, seeds, limit=lambda n: _is_power_of(n, p))
        if _is_power_of(cand.order(), p):
            core = cand
    return core


def centraliser(g: PermGroup, k: PermGroup, bound: int | None = None) -> PermGroup:
    """Elements of ``g`` commuting with every generator of ``k``, by filtered enumeration."""
    if k.is_trivial():
        return g
    elems = g.element_array(bound)
    gens = _kernels.as_rows([tuple(x) for x in k.generators], g.degree)
    mask = _kernels.commute_mask(elems, gens)
    return group_from_rows(elems[mask], g.degree)


@dataclass
class FittingReport:
    fitting: PermGroup
    fstar_certified: bool
    fstar: PermGroup | None
    cores: dict


def fitting_and_fstar(g: PermGroup, bound: int | None = None) -> FittingReport:
    """Fitting subgroup and, when ``C_g(F) <= F`` certifies ``E(g) = 1``, ``F*(g) = F``."""
    cores = {p: p_core(g, p, bound) for p in prime_divisors(g.order(), g.degree)}
    fit = PermGroup.trivial(g.degree)
    for core in cores.values():
        if not core.is_trivial():
            fit = fit.join(core)
    cent = centraliser(g, fit, bound)
    certified = cent.is_subgroup_of(fit)
    return FittingReport(fit, certified, fit if certified else None, cores)


# -- signatures -------------------------------------------------------------

@dataclass(frozen=True)
class Signature:
    order: int
    orbit_lengths: tuple
    block_sizes: tuple
    cycle_types: tuple | None   # None when enumeration was skipped
    partial: bool = False

    def agrees(self, other: Signature) -> bool:
        """Strong invariant agreement; necessary (not sufficient) for permutation isomorphism."""
        if self.partial or other.partial:
            return (self.order, self.orbit_lengths, self.block_sizes) == \
                (other.order, other.orbit_lengths, other.block_sizes)
        return self == other


def invariant_signature(g: PermGroup, domain: Sequence[int] | None = None,
                        bound: int | None = None) -> Signature:
    img = _image(g, domain)
    orbit_lengths = tuple(sorted(len(o) for o in img.orbits()))
    blocks = _block_sizes(img) if _is_transitive(img) else ()
    try:
        elems = img.element_array(bound)
    except EnumerationBoundExceeded:
        return Signature(img.order(), orbit_lengths, blocks, None, partial=True)
    counts = _kernels.cycle_type_counts(elems)
    tally = Counter(tuple(int(c) for c in row) for row in counts)
    return Signature(img.order(), orbit_lengths, blocks, tuple(sorted(tally.items())))
