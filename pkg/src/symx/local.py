"""Local structure of a vertex-stabiliser: local actions, kernels G_x^[i], and verdicts.

Two kinds of input are supported: coset presentations (only balls around the
base arc are ever built) and explicit small graphs with a supplied group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .chain import (
    EnumerationBoundExceeded,
    PermGroup,
    commutator_subgroup,
    kernel_on_aux,
    normal_closure,
    stabiliser_on_aux,
)
from .coset import DEFAULT_CAP, CosetGraphSpec, ExplicitGraph, action_on_vertices, ball
from .props import (
    TRIVIAL,
    ActionClass,
    centraliser,
    classify_action,
    fitting_and_fstar,
    invariant_signature,
    is_p_group,
    p_core,
    prime_divisors,
)

__all__ = [
    "PASS",
    "FAIL",
    "SKIP",
    "UNDETERMINED",
    "HypothesisReport",
    "TWVerdict",
    "LocalAnalysis",
    "analyze",
]

PASS, FAIL, SKIP, UNDETERMINED = "pass", "fail", "skip", "undetermined"
NOT_P_GROUP = "not a p-group"
TRIVIAL_CONVENTION = "trivial group counted as a p-group"


def _combine(statuses) -> str:
    statuses = list(statuses)
    if FAIL in statuses:
        return FAIL
    if UNDETERMINED in statuses:
        return UNDETERMINED
    return PASS


# -- sites ------------------------------------------------------------------

class _CosetSite:
    kind = "coset"

    def __init__(self, spec: CosetGraphSpec, cap: int = DEFAULT_CAP):
        self.spec = spec
        self.cap = cap
        self.x = spec.base_vertex
        self.y = spec.arc_vertex
        self._balls = {}

    @property
    def degree(self) -> int:
        return self.spec.degree

    @cached_property
    def gx(self) -> PermGroup:
        return self.spec.subgroup

    @cached_property
    def gy(self) -> PermGroup:
        # stabiliser of the coset Ha is a^-1 H a
        return self.spec.subgroup.conjugate(self.spec.a)

    def _ball(self, side: str, radius: int):
        held = self._balls.get(side)
        if held is None or held.radius < radius:
            centre = self.x if side == "x" else self.y
            held = ball(self.spec, radius, self.cap, center=centre)
            self._balls[side] = held
        return held

    def sphere(self, side: str, d: int) -> list:
        b = self._ball(side, d)
        return [b.verts[i] for i in b.sphere(d)]

    @cached_property
    def neighbours(self) -> list:
        return self.sphere("x", 1)

    @property
    def valency(self) -> int:
        return len(self.neighbours)

    def kernel(self, side: str, i: int) -> PermGroup:
        grp = self.gx if side == "x" else self.gy
        for d in range(1, i + 1):
            act = action_on_vertices(self.spec, grp, self.sphere(side, d))
            grp = kernel_on_aux(grp, act)
        return grp

    @cached_property
    def gxy(self) -> PermGroup:
        nb = self.neighbours
        act = action_on_vertices(self.spec, self.gx, nb)
        return stabiliser_on_aux(self.gx, act, [nb.index(self.y)])

    def arc_kernel(self) -> PermGroup:
        verts = list(dict.fromkeys(self.sphere("x", 1) + self.sphere("y", 1)))
        return kernel_on_aux(self.gxy, action_on_vertices(self.spec, self.gxy, verts))

    def project(self, sub: PermGroup) -> PermGroup:
        act = action_on_vertices(self.spec, sub, self.neighbours)
        return PermGroup(act.images, degree=self.valency)

    @property
    def vertex_transitive(self) -> bool:
        return True


class _ExplicitSite:
    kind = "explicit"

    def __init__(self, graph: ExplicitGraph, x: int = 0, y: int | None = None):
        self.graph = graph
        self.x = x
        nb = graph.adjacency[x]
        if not nb:
            raise ValueError(f"vertex {x} has no neighbours")
        self.y = nb[0] if y is None else y
        if self.y not in nb:
            raise ValueError(f"{self.y} is not adjacent to {x}")

    @property
    def degree(self) -> int:
        return self.graph.n

    @cached_property
    def group(self) -> PermGroup:
        return self.graph.group

    @cached_property
    def gx(self) -> PermGroup:
        return self.group.stabiliser(self.x)

    @cached_property
    def gy(self) -> PermGroup:
        return self.group.stabiliser(self.y)

    @property
    def neighbours(self) -> list:
        return self.graph.adjacency[self.x]

    @property
    def valency(self) -> int:
        return len(self.neighbours)

    def kernel(self, side: str, i: int) -> PermGroup:
        v = self.x if side == "x" else self.y
        return self.group.pointwise_stabiliser(self.graph.ball(v, i))

    @cached_property
    def gxy(self) -> PermGroup:
        return self.group.pointwise_stabiliser([self.x, self.y])

    def arc_kernel(self) -> PermGroup:
        pts = list(dict.fromkeys(self.graph.ball(self.x, 1) + self.graph.ball(self.y, 1)))
        return self.group.pointwise_stabiliser(pts)

    def project(self, sub: PermGroup) -> PermGroup:
        return sub.restrict(self.neighbours)

    @property
    def vertex_transitive(self) -> bool:
        return len(self.group.orbit(self.x)) == self.graph.n


# -- reports ----------------------------------------------------------------

@dataclass
class HypothesisReport:
    local_transitive: bool
    cond_i: str
    cond_i_class: ActionClass | None
    cond_ii: dict                     # prime -> status
    cond_ii_class: dict               # prime -> ActionClass of the Δ(x)-image
    primes_checked: list
    e_x: dict = field(default_factory=dict, repr=False)

    @property
    def status(self) -> str:
        if not self.local_transitive:
            return FAIL
        return _combine([self.cond_i, *self.cond_ii.values()])

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "local_transitive": self.local_transitive,
            "cond_i": self.cond_i,
            "cond_i_class": self.cond_i_class.as_dict() if self.cond_i_class else None,
            "cond_ii": {str(p): s for p, s in self.cond_ii.items()},
            "cond_ii_class": {str(p): c.as_dict() for p, c in self.cond_ii_class.items()},
            "primes_checked": list(self.primes_checked),
        }


@dataclass
class TWVerdict:
    branch: str                 # "p-group", "alternative", "violated", "undetermined"
    p: object = None            # prime, TRIVIAL or None
    orientation: str | None = None
    fstar_clause: str = UNDETERMINED   # "p-group", "alternative", "violated", "undetermined"
    fstar_p: object = None
    fstar_orientation: str | None = None

    def as_dict(self) -> dict:
        return {
            "branch": self.branch,
            "p": None if self.p is None else str(self.p),
            "orientation": self.orientation,
            "fstar_clause": self.fstar_clause,
            "fstar_p": None if self.fstar_p is None else str(self.fstar_p),
            "fstar_orientation": self.fstar_orientation,
        }


def p_label(p) -> str:
    if p is None:
        return NOT_P_GROUP
    return TRIVIAL if p == TRIVIAL else str(p)


def _transitive_or_semiregular(cls: ActionClass) -> str:
    return PASS if cls.transitive or cls.semiregular else FAIL


# -- analysis ---------------------------------------------------------------

class LocalAnalysis:
    """Lazy local analysis of one arc ``(x, y)``; every quantity is computed once."""

    def __init__(self, site, bound: int | None = None):
        self.site = site
        self.bound = bound
        self.conventions = set()

    @classmethod
    def of(cls, source, bound: int | None = None, cap: int = DEFAULT_CAP, vertex: int = 0):
        if isinstance(source, CosetGraphSpec):
            return cls(_CosetSite(source, cap), bound)
        if isinstance(source, ExplicitGraph):
            return cls(_ExplicitSite(source, vertex), bound)
        raise TypeError(f"cannot analyse {type(source).__name__}")

    @property
    def valency(self) -> int:
        return self.site.valency

    @property
    def gx(self) -> PermGroup:
        return self.site.gx

    @property
    def gy(self) -> PermGroup:
        return self.site.gy

    @property
    def gxy(self) -> PermGroup:
        return self.site.gxy

    @cached_property
    def local_action(self) -> PermGroup:
        return self.site.project(self.site.gx)

    @cached_property
    def local_class(self) -> ActionClass:
        return classify_action(self.local_action, bound=self.bound)

    @cached_property
    def _kernels(self) -> dict:
        return {}

    def kernel(self, side: str, i: int) -> PermGroup:
        key = (side, i)
        if key not in self._kernels:
            self._kernels[key] = self.site.kernel(side, i)
        return self._kernels[key]

    @cached_property
    def arc_kernel(self) -> PermGroup:
        return self.site.arc_kernel()

    @cached_property
    def arc_kernel_p(self):
        p = is_p_group(self.arc_kernel)
        if p == TRIVIAL:
            self.conventions.add(TRIVIAL_CONVENTION)
        return p

    @property
    def arc_transitive(self) -> bool:
        return self.site.vertex_transitive and self.local_action_transitive

    @property
    def local_action_transitive(self) -> bool:
        return len(self.local_action.orbit(0)) == self.valency

    # -- Hypothesis 1 ------------------------------------------------------

    @cached_property
    def hypothesis(self) -> HypothesisReport:
        gx1 = self.kernel("x", 1)
        try:
            cent = centraliser(self.gx, gx1, self.bound)
            c_cls = classify_action(self.site.project(cent), bound=self.bound)
            cond_i = _transitive_or_semiregular(c_cls)
        except EnumerationBoundExceeded:
            c_cls, cond_i = None, UNDETERMINED
        primes = prime_divisors(self.gxy.order(), self.site.degree)
        cond_ii, classes, e_x = {}, {}, {}
        for p in primes:
            try:
                core = p_core(self.gxy, p, self.bound)
            except EnumerationBoundExceeded:
                cond_ii[p] = UNDETERMINED
                continue
            e = normal_closure(self.gx, core.generators) if not core.is_trivial() \
                else PermGroup.trivial(self.site.degree)
            e_x[p] = e
            cls = classify_action(self.site.project(e), bound=self.bound)
            classes[p] = cls
            cond_ii[p] = _transitive_or_semiregular(cls)
        return HypothesisReport(self.local_action_transitive, cond_i, c_cls, cond_ii, classes,
                                primes, e_x)

    # -- Theorem 1 dichotomy -------------------------------------------------

    def _orientations(self):
        yield "x,y", "x", "y"
        yield "y,x", "y", "x"

    @cached_property
    def verdict(self) -> TWVerdict:
        k = self.arc_kernel
        p = self.arc_kernel_p
        if p is not None:
            out = TWVerdict("p-group", p)
        else:
            out = TWVerdict("violated")
            for label, near, far in self._orientations():
                if not k.same_group(self.kernel(near, 2)):
                    continue
                far2 = self.kernel(far, 2)
                if not far2.same_group(self.kernel(far, 3)):
                    continue
                q = is_p_group(far2)
                if q is not None:
                    if q == TRIVIAL:
                        self.conventions.add(TRIVIAL_CONVENTION)
                    out = TWVerdict("alternative", q, label)
                    break
        self._fstar_clause(out)
        return out

    def _fstar_clause(self, out: TWVerdict) -> None:
        try:
            fit = fitting_and_fstar(self.gxy, self.bound)
        except EnumerationBoundExceeded:
            fit = None
        if fit is not None and fit.fstar_certified:
            q = is_p_group(fit.fstar)
            if q is not None:
                if q == TRIVIAL:
                    self.conventions.add(TRIVIAL_CONVENTION)
                out.fstar_clause, out.fstar_p = "p-group", q
                return
        for label, near, far in self._orientations():
            if self.arc_kernel.same_group(self.kernel(near, 2)) and self.kernel(far, 2).is_trivial():
                out.fstar_clause, out.fstar_orientation = "alternative", label
                return
        out.fstar_clause = "violated" if fit is not None and fit.fstar_certified else UNDETERMINED

    # -- conformance -------------------------------------------------------

    @cached_property
    def conformance(self) -> tuple:
        """``(status, reason)`` for the dichotomy and, when locally semiprimitive, its corollary."""
        hyp = self.hypothesis.status
        if hyp != PASS:
            return SKIP, f"hypothesis {hyp}"
        v = self.verdict
        if v.branch not in ("p-group", "alternative"):
            return FAIL, f"dichotomy branch {v.branch} under a passing hypothesis"
        if self.arc_transitive and self.local_class.semiprimitive:
            if v.branch != "p-group":
                return FAIL, "locally semiprimitive but arc kernel is not a p-group"
            if v.fstar_clause != "p-group" and not self.arc_kernel.is_trivial():
                if v.fstar_clause == UNDETERMINED:
                    return SKIP, "generalised Fitting subgroup not certified"
                return FAIL, "locally semiprimitive but neither F* is a p-group nor the kernel trivial"
            return PASS, "corollary form holds"
        return PASS, "dichotomy holds"

    @cached_property
    def lemma23(self) -> dict:
        """Per prime: ``[G_x^[1], E_x] <= O_p(G_x^[1])`` (None if undetermined)."""
        gx1 = self.kernel("x", 1)
        out = {}
        for p in self.hypothesis.primes_checked:
            e = self.hypothesis.e_x.get(p)
            if e is None:
                out[p] = None
                continue
            try:
                core = p_core(gx1, p, self.bound)
            except EnumerationBoundExceeded:
                out[p] = None
                continue
            out[p] = commutator_subgroup(gx1, e).is_subgroup_of(core)
        return out

    # -- serialisation -----------------------------------------------------

    def orders(self) -> dict:
        out = {"G_x": self.gx.order(), "G_y": self.gy.order(), "G_xy": self.gxy.order()}
        for side in ("x", "y"):
            for i in (1, 2, 3):
                out[f"G_{side}^[{i}]"] = self.kernel(side, i).order()
        out["G_xy^[1]"] = self.arc_kernel.order()
        return out

    def report(self) -> dict:
        cls = self.local_class
        try:
            sig = invariant_signature(self.local_action, bound=self.bound)
            blocks = list(sig.block_sizes)
        except EnumerationBoundExceeded:
            blocks = None
        verdict = self.verdict
        status, reason = self.conformance
        out = {
            "kind": self.site.kind,
            "valency": self.valency,
            "vertex_transitive": self.site.vertex_transitive,
            "arc_transitive": self.arc_transitive,
            "local_action": {**cls.as_dict(), "block_sizes": blocks},
            "orders": {k: str(v) for k, v in self.orders().items()},
            "arc_kernel_p": p_label(self.arc_kernel_p),
            "hypothesis1": self.hypothesis.as_dict(),
            "tw_verdict": verdict.as_dict(),
            "theorem1_conformance": {"status": status, "reason": reason},
            "lemma23": {str(p): v for p, v in self.lemma23.items()},
        }
        out["conventions"] = sorted(self.conventions)
        return out


def analyze(source, bound: int | None = None, cap: int = DEFAULT_CAP) -> LocalAnalysis:
    return LocalAnalysis.of(source, bound=bound, cap=cap)
