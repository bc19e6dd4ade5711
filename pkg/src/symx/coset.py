"""Coset graphs Cos(G, H, a): vertices are right cosets Hg, with H adjacent to Ha.

Vertices are identified by their canonical (lexicographically minimal)
coset representatives, so no global index table is ever built.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .chain import AuxAction, PermGroup
from .perm import Permutation

__all__ = [
    "CapExceeded",
    "CosetGraphSpec",
    "ValidationReport",
    "CosetBall",
    "ExplicitGraph",
    "validate_spec",
    "neighbors",
    "ball",
    "action_on_vertices",
    "action_on_ball",
    "materialize",
]

DEFAULT_CAP = 10**5


class CapExceeded(RuntimeError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"vertex budget {cap} exceeded ({size} vertices reached)")
        self.size = size
        self.cap = cap


class CosetGraphSpec:
    """A presentation ``Cos(G, H, a)`` with ``H = <sub_gens>``."""

    def __init__(self, group: PermGroup, sub_gens: Sequence[Sequence[int]], a: Sequence[int]):
        self.group = group
        self.degree = group.degree
        self.sub_gens = [Permutation(g) for g in sub_gens]
        self.a = Permutation(a)
        for g in self.sub_gens + [self.a]:
            if len(g) != self.degree:
                raise ValueError(f"element of degree {len(g)} in a spec of degree {self.degree}")
        self.subgroup = PermGroup(self.sub_gens, degree=self.degree)

    def canonical(self, g: Sequence[int]) -> Permutation:
        return self.subgroup.minimal_coset_rep(g)

    @cached_property
    def base_vertex(self) -> Permutation:
        return self.canonical(Permutation.identity(self.degree))

    @property
    def degenerate(self) -> bool:
        """``a`` in ``H``: the only 'neighbour' of H would be H itself."""
        return self.subgroup.contains(self.a)

    @cached_property
    def base_neighbours(self) -> tuple:
        """Canonical reps of the cosets Hah (h in H), i.e. the H-orbit of Ha."""
        if self.degenerate:
            return ()
        start = self.canonical(self.a)
        seen = {start}
        queue = deque([start])
        while queue:
            w = queue.popleft()
            for h in self.sub_gens:
                u = self.canonical(w * h)
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return tuple(sorted(seen))

    @property
    def valency(self) -> int:
        return len(self.base_neighbours)

    @property
    def arc_vertex(self) -> Permutation:
        """The vertex Ha, the far end of the base arc."""
        return self.canonical(self.a)

    def __repr__(self):
        return f"CosetGraphSpec(degree={self.degree}, |H|={self.subgroup.order()}, a={self.a})"


def neighbors(spec: CosetGraphSpec, v: Sequence[int]) -> list:
    """Canonical reps of the cosets H·a·h·v for h in H."""
    v = tuple(v)
    out = []
    seen = set()
    for w in spec.base_neighbours:
        u = spec.canonical(w * v)
        if u not in seen:
            seen.add(u)
            out.append(u)
    return out


@dataclass
class ValidationReport:
    ok: bool
    failures: list
    checks: dict
    valency: int
    degenerate: bool

    def as_dict(self) -> dict:
        return {"ok": self.ok, "failures": list(self.failures), "checks": dict(self.checks),
                "valency": self.valency, "degenerate": self.degenerate}


def validate_spec(spec: CosetGraphSpec) -> ValidationReport:
    failures = []
    checks = {}
    g = spec.group
    bad = [i for i, h in enumerate(spec.sub_gens) if not g.contains(h)]
    checks["subgroup_in_group"] = not bad
    for i in bad:
        failures.append(f"membership: subgroup generator {i} ∉ G")
    checks["a_in_group"] = g.contains(spec.a)
    if not checks["a_in_group"]:
        failures.append("membership: a ∉ G")
    joined = PermGroup(spec.sub_gens + [spec.a], degree=spec.degree)
    checks["order_G"] = str(g.order())
    checks["order_join"] = str(joined.order())
    checks["connected"] = joined.order() == g.order() and joined.is_subgroup_of(g)
    if not checks["connected"]:
        failures.append("connectivity: ⟨H,a⟩ ≠ G")
    if (spec.a * spec.a).is_identity():
        checks["undirected"] = True
    else:
        checks["undirected"] = spec.canonical(spec.a.inverse()) in set(spec.base_neighbours)
    if not checks["undirected"]:
        failures.append("undirectedness: a⁻¹ ∉ HaH")
    return ValidationReport(not failures, failures, checks, spec.valency, spec.degenerate)


@dataclass
class CosetBall:
    radius: int
    verts: list                  # canonical reps; verts[0] is the centre
    dist: list
    adj: list                    # adjacency as lists of ball indices
    open: list                   # True if the vertex has neighbours outside the ball
    index: dict = field(repr=False, default_factory=dict)
    spec: CosetGraphSpec | None = field(repr=False, default=None)

    def __len__(self) -> int:
        return len(self.verts)

    def sphere(self, d: int) -> list:
        return [i for i, x in enumerate(self.dist) if x == d]


def ball(spec: CosetGraphSpec, radius: int, cap: int = DEFAULT_CAP,
         center: Sequence[int] | None = None) -> CosetBall:
    """Breadth-first ball around ``center`` (default: the base vertex H)."""
    if radius < 0:
        raise ValueError("radius must be non-negative")
    start = spec.base_vertex if center is None else spec.canonical(center)
    verts = [start]
    dist = [0]
    index = {start: 0}
    nbrs = []
    i = 0
    while i < len(verts):
        found = neighbors(spec, verts[i])
        nbrs.append(found)
        if dist[i] < radius:
            for u in found:
                if u not in index:
                    index[u] = len(verts)
                    verts.append(u)
                    dist.append(dist[i] + 1)
                    if len(verts) > cap:
                        raise CapExceeded(len(verts), cap)
        i += 1
    adj = []
    open_ = []
    for found in nbrs:
        inside = [index[u] for u in found if u in index]
        adj.append(inside)
        open_.append(len(inside) < len(found))
    return CosetBall(radius, verts, dist, adj, open_, index, spec)


def action_on_vertices(spec: CosetGraphSpec, subgroup: PermGroup, verts: Sequence) -> AuxAction:
    """Action ``v -> canonical(v·h)`` of the generators of ``subgroup`` on ``verts``."""
    index = {v: i for i, v in enumerate(verts)}
    rows = []
    for h in subgroup.generators:
        row = []
        for v in verts:
            u = spec.canonical(Permutation._trusted(tuple(v)) * h)
            if u not in index:
                raise ValueError("subgroup does not stabilise the vertex set")
            row.append(index[u])
        rows.append(tuple(row))
    return AuxAction(len(verts), tuple(rows))


def action_on_ball(subgroup: PermGroup, b: CosetBall) -> AuxAction:
    return action_on_vertices(b.spec, subgroup, b.verts)


@dataclass
class ExplicitGraph:
    """A finite simple connected graph on ``0..n-1`` with a group acting on it."""

    n: int
    edges: list
    aut_gens: list

    def __post_init__(self):
        self.edges = sorted({(min(u, v), max(u, v)) for u, v in self.edges})
        if len(self.edges) == 0 and self.n > 1:
            raise ValueError("graph is not connected")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range")
        self.aut_gens = [Permutation(g) for g in self.aut_gens]
        edge_set = set(self.edges)
        for i, g in enumerate(self.aut_gens):
            if len(g) != self.n:
                raise ValueError(f"automorphism generator {i} has wrong degree")
            for u, v in self.edges:
                a, b = g[u], g[v]
                if (min(a, b), max(a, b)) not in edge_set:
                    raise ValueError(f"generator {i} does not preserve the edge set")
        if self.n and len(self._component(0)) != self.n:
            raise ValueError("graph is not connected")

    @cached_property
    def adjacency(self) -> list:
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return [sorted(a) for a in adj]

    def _component(self, x: int) -> set:
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {x}
        stack = [x]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    @cached_property
    def group(self) -> PermGroup:
        return PermGroup(self.aut_gens, degree=self.n)

    def ball(self, x: int, radius: int) -> list:
        """Vertices at distance at most ``radius`` from ``x``, in BFS order."""
        dist = {x: 0}
        order = [x]
        i = 0
        while i < len(order):
            u = order[i]
            if dist[u] < radius:
                for w in self.adjacency[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        order.append(w)
            i += 1
        return order


def materialize(spec: CosetGraphSpec, cap: int = DEFAULT_CAP) -> ExplicitGraph:
    """The whole coset graph, with G's generators acting on vertex indices."""
    if spec.degenerate:
        return ExplicitGraph(1, [], [Permutation.identity(1) for _ in spec.group.generators])
    size = spec.group.order() // spec.subgroup.order()
    if size > cap:
        raise CapExceeded(size, cap)
    index = {spec.base_vertex: 0}
    verts = [spec.base_vertex]
    edges = []
    i = 0
    while i < len(verts):
        for u in neighbors(spec, verts[i]):
            if u not in index:
                index[u] = len(verts)
                verts.append(u)
                if len(verts) > cap:
                    raise CapExceeded(len(verts), cap)
            edges.append((i, index[u]))
        i += 1
    aut = []
    for g in spec.group.generators:
        aut.append(Permutation([index[spec.canonical(v * g)] for v in verts]))
    return ExplicitGraph(len(verts), edges, aut)
