"""The wreath-product family of arc-transitive coset graphs built from (R, S, m).

R and S are transitive groups of degrees r, s > 1 and m >= 3 is odd.  The
domain is Omega = {0, ..., mrs + r - 2}, split into m strips X_j of size rs
(each cut into s blocks Y_{i,j} of size r) and a tail X_m of size r - 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

from .chain import PermGroup, kernel_on_aux, stabiliser_on_aux
from .coset import CosetGraphSpec, action_on_vertices
from .perm import Permutation
from .props import invariant_signature, is_primitive

__all__ = [
    "ConstructionError",
    "ConstructionParams",
    "OmegaLayout",
    "ConstructionOutput",
    "omega_layout",
    "build_generators",
    "build_a",
    "build_groups",
    "wreath_product",
    "verify_lemma1",
    "verify_lemma2",
    "verify_theorem3",
    "DEFAULT_TRIPLES",
    "default_params",
]


class ConstructionError(RuntimeError):
    pass


def _cyclic(n: int) -> PermGroup:
    return PermGroup([Permutation([(i + 1) % n for i in range(n)])], degree=n)


def _symmetric(n: int) -> PermGroup:
    gens = [Permutation([(i + 1) % n for i in range(n)])]
    if n > 2:
        gens.append(Permutation([1, 0] + list(range(2, n))))
    return PermGroup(gens, degree=n)


@dataclass(frozen=True)
class ConstructionParams:
    R: PermGroup
    S: PermGroup
    m: int
    name: str = ""

    def __post_init__(self):
        if self.R.degree < 2 or self.S.degree < 2:
            raise ValueError("R and S must have degree greater than 1")
        if self.m < 3 or self.m % 2 == 0:
            raise ValueError(f"m must be an odd integer >= 3, got {self.m}")
        for label, g in (("R", self.R), ("S", self.S)):
            if len(g.orbit(0)) != g.degree:
                raise ValueError(f"{label} is not transitive")

    @property
    def r(self) -> int:
        return self.R.degree

    @property
    def s(self) -> int:
        return self.S.degree


@dataclass(frozen=True)
class OmegaLayout:
    r: int
    s: int
    m: int

    @property
    def n(self) -> int:
        return self.m * self.r * self.s + self.r - 1

    def point(self, z: int, i: int, j: int) -> int:
        return z + i * self.r + j * self.r * self.s

    def Y(self, i: int, j: int) -> list:
        return [self.point(z, i, j) for z in range(self.r)]

    def X(self, j: int) -> list:
        rs = self.r * self.s
        if j == self.m:
            return list(range(self.m * rs, self.n))
        return list(range(j * rs, (j + 1) * rs))

    def as_dict(self) -> dict:
        return {
            "n": self.n, "r": self.r, "s": self.s, "m": self.m,
            "X": [self.X(j) for j in range(self.m + 1)],
            "Y": {f"{i},{j}": self.Y(i, j) for j in range(self.m) for i in range(self.s)},
        }


def omega_layout(params: ConstructionParams) -> OmegaLayout:
    return OmegaLayout(params.r, params.s, params.m)


# -- generators -------------------------------------------------------------

def _x_block(lay: OmegaLayout, sigma, i: int, j: int) -> Permutation:
    img = list(range(lay.n))
    for z in range(lay.r):
        img[lay.point(z, i, j)] = lay.point(sigma[z], i, j)
    return Permutation(img)


def _x_tail(lay: OmegaLayout, sigma) -> Permutation:
    # sigma fixes r-1, so it permutes {0..r-2}
    img = list(range(lay.n))
    base = lay.m * lay.r * lay.s
    for z in range(lay.r - 1):
        img[z + base] = sigma[z] + base
    return Permutation(img)


def _y(lay: OmegaLayout, tau) -> Permutation:
    img = list(range(lay.n))
    for j in range(lay.m):
        for i in range(lay.s):
            for z in range(lay.r):
                img[lay.point(z, i, j)] = lay.point(z, tau[i], j)
    return Permutation(img)


@dataclass
class Generators:
    R_Y: dict          # (i, j) -> generators of R(Y_{i,j})
    R_Y00_stab: list   # generators of R(Y_{0,0})_{r-1}
    R_Xm: list         # generators of R(X_m)
    S_Omega: list
    S0_Omega: list


def build_generators(params: ConstructionParams) -> Generators:
    lay = omega_layout(params)
    r_stab = params.R.stabiliser(params.r - 1)
    s_stab = params.S.stabiliser(0)
    r_y = {(i, j): [_x_block(lay, g, i, j) for g in params.R.generators]
           for j in range(lay.m) for i in range(lay.s)}
    return Generators(
        R_Y=r_y,
        R_Y00_stab=[_x_block(lay, g, 0, 0) for g in r_stab.generators],
        R_Xm=[_x_tail(lay, g) for g in r_stab.generators],
        S_Omega=[_y(lay, t) for t in params.S.generators],
        S0_Omega=[_y(lay, t) for t in s_stab.generators],
    )


def build_a(params: ConstructionParams) -> Permutation:
    lay = omega_layout(params)
    r, s, m = lay.r, lay.s, lay.m
    rs = r * s
    img = [None] * lay.n
    for z in range(r - 1):
        img[z] = z + m * rs
        img[z + m * rs] = z
    img[r - 1] = r - 1
    for j in range(1, m):
        for z in range(r):
            if j % 2 == 1 and j <= m - 2:
                img[z + j * rs] = z + (j + 1) * rs
            elif j % 2 == 0 and j >= 2:
                img[z + j * rs] = z + (j - 1) * rs
    for i in range(1, s):
        for j in range(m):
            for z in range(r):
                pt = lay.point(z, i, j)
                if j == m - 1:
                    img[pt] = pt
                elif j % 2 == 0:
                    img[pt] = lay.point(z, i, j + 1)
                else:
                    img[pt] = lay.point(z, i, j - 1)
    if None in img:
        raise ConstructionError(f"a is undefined at point {img.index(None)}")
    a = Permutation(img)
    _check_a(lay, a)
    return a


def _check_a(lay: OmegaLayout, a: Permutation) -> None:
    if not (a * a).is_identity():
        raise ConstructionError("a is not an involution")
    fixed = {lay.r - 1} | (set(lay.X(lay.m - 1)) - set(lay.Y(0, lay.m - 1)))
    moved = [x for x in fixed if a[x] != x]
    if moved:
        raise ConstructionError(f"a moves points {sorted(moved)} that must be fixed")

    def image(block):
        return sorted(a[x] for x in block)

    if image(lay.Y(0, 0)[:-1]) != lay.X(lay.m):
        raise ConstructionError("a does not swap Y'_{0,0} and X_m")
    for j in range(1, lay.m - 1, 2):
        if image(lay.Y(0, j)) != lay.Y(0, j + 1):
            raise ConstructionError(f"a does not swap Y_(0,{j}) and Y_(0,{j + 1})")
        for i in range(1, lay.s):
            if image(lay.Y(i, j)) != lay.Y(i, j - 1):
                raise ConstructionError(f"a does not swap Y_({i},{j}) and Y_({i},{j - 1})")


def wreath_product(R: PermGroup, S: PermGroup) -> PermGroup:
    """The imprimitive action of ``R wr S`` on ``r*s`` points, blocks ``{ir..ir+r-1}``."""
    r, s = R.degree, S.degree
    gens = []
    for g in R.generators:
        img = list(range(r * s))
        for z in range(r):
            img[z] = g[z]
        gens.append(Permutation(img))
    for t in S.generators:
        gens.append(Permutation([z + t[i] * r for i in range(s) for z in range(r)]))
    return PermGroup(gens, degree=r * s)


# -- groups -----------------------------------------------------------------

@dataclass
class ConstructionOutput:
    params: ConstructionParams
    layout: OmegaLayout
    gens: Generators
    a: Permutation
    H: PermGroup
    K: PermGroup
    L: PermGroup
    V: PermGroup
    G: PermGroup
    notes: list = field(default_factory=list)

    @cached_property
    def spec(self) -> CosetGraphSpec:
        return CosetGraphSpec(self.G, self.H.generators, self.a)

    @property
    def order_R(self) -> int:
        return self.params.R.order()

    @property
    def order_R_stab(self) -> int:
        return self.params.R.stabiliser(self.params.r - 1).order()


def _all(*lists) -> list:
    return [g for lst in lists for g in lst]


def build_groups(params: ConstructionParams) -> ConstructionOutput:
    lay = omega_layout(params)
    n = lay.n
    gens = build_generators(params)
    a = build_a(params)
    r_y = gens.R_Y
    H = PermGroup(_all(*r_y.values(), gens.R_Xm, gens.S_Omega), degree=n)
    k_blocks = [g for (i, j), lst in r_y.items() if (i, j) != (0, 0) for g in lst]
    K = PermGroup(_all(gens.R_Y00_stab, k_blocks, gens.R_Xm, gens.S0_Omega), degree=n)
    L = PermGroup(_all(*(lst for (i, j), lst in r_y.items() if j >= 1), gens.R_Xm), degree=n)
    V = PermGroup(_all(*r_y.values(), gens.S_Omega), degree=n)
    G = PermGroup(list(H.generators) + [a], degree=n)

    rho, sigma = params.R.order(), params.S.order()
    rho0 = params.R.stabiliser(params.r - 1).order()
    r, s, m = lay.r, lay.s, lay.m
    expected = {
        "H": (H, rho ** (s * m) * sigma * rho0),
        "K": (K, rho ** (s * m) * sigma * rho0 // (r * s)),
        "L": (L, rho ** (s * (m - 1)) * rho0),
        "V": (V, rho ** (s * m) * sigma),
    }
    for label, (grp, want) in expected.items():
        if grp.order() != want:
            raise ConstructionError(f"|{label}| = {grp.order()}, expected {want}")
    notes = ["S(Omega) is generated by the maps y_tau; they fix X_m pointwise and move the rest"]
    return ConstructionOutput(params, lay, gens, a, H, K, L, V, G, notes)


# -- verification -----------------------------------------------------------

@dataclass
class VerifyReport:
    family: str
    checks: list = field(default_factory=list)   # (name, ok, detail)
    values: dict = field(default_factory=dict)

    def add(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append((name, bool(ok), detail))
        return bool(ok)

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    @property
    def failures(self) -> list:
        return [f"{name}: {detail}" if detail else name for name, ok, detail in self.checks if not ok]

    def as_dict(self) -> dict:
        return {
            "family": self.family,
            "status": "pass" if self.ok else "fail",
            "checks": [{"name": n, "ok": ok, "detail": d} for n, ok, d in self.checks],
            "values": {k: str(v) if isinstance(v, int) and not isinstance(v, bool) else v
                       for k, v in self.values.items()},
        }


def verify_lemma1(out: ConstructionOutput) -> VerifyReport:
    rep = VerifyReport("lemma1")
    lay, H, K, L, a = out.layout, out.H, out.K, out.L, out.a
    r, s = lay.r, lay.s
    pt = r - 1
    x0 = set(lay.X(0))

    orb = set(H.orbit(pt))
    rep.add("orbit of r-1 under H is X_0", orb == x0, f"{sorted(orb)}")
    Ha = H.conjugate(a)
    orb_a = set(Ha.orbit(pt))
    rep.add("orbit of r-1 under H^a meets X_0 only in r-1", orb_a & x0 == {pt},
            f"{sorted(orb_a)}")
    want = set(lay.X(lay.m)) | {pt} | {x for i in range(1, s) for x in lay.Y(i, 1)}
    rep.add("orbit of r-1 under H^a is X_m + {r-1} + Y_(i,1), i >= 1", orb_a == want)

    in_ha = all(Ha.contains(k) for k in K.generators)
    rep.add("K <= H^a", in_ha)
    rep.add("a normalises K", all(K.contains(k.conjugate(a)) for k in K.generators))

    stab = H.stabiliser(pt)
    rep.add("K is the stabiliser of r-1 in H", K.same_group(stab),
            f"|K| = {K.order()}, |H_(r-1)| = {stab.order()}")
    index = H.order() // K.order()
    rep.add("|H : H meet H^a| = rs", index == r * s, f"index {index}")
    # second route: the stabiliser in H of the neighbour coset Ha
    spec = out.spec
    nb = list(spec.base_neighbours)
    act = action_on_vertices(spec, H, nb)
    gxy = stabiliser_on_aux(H, act, [nb.index(spec.arc_vertex)])
    rep.add("coset stabiliser of Ha equals K", gxy.same_group(K), f"order {gxy.order()}")
    rep.add("valency is rs", len(nb) == r * s, f"valency {len(nb)}")

    core = kernel_on_aux(H, act)
    rep.add("core of K in H equals L", core.same_group(L),
            f"|core| = {core.order()}, |L| = {L.order()}")
    fix_x0 = H.pointwise_stabiliser(sorted(x0))
    rep.add("pointwise stabiliser of X_0 in H equals L", fix_x0.same_group(L))

    local = PermGroup(act.images, degree=len(nb))
    direct = wreath_product(out.params.R, out.params.S)
    sig_local, sig_direct = invariant_signature(local), invariant_signature(direct)
    rep.add("H/L action agrees with R wr S (strong invariants)", sig_local.agrees(sig_direct),
            f"orders {sig_local.order} / {sig_direct.order}")
    rep.values.update(index=index, order_K=K.order(), order_core=core.order(),
                      order_local=local.order())
    return rep


def verify_lemma2(out: ConstructionOutput) -> VerifyReport:
    rep = VerifyReport("lemma2")
    n = out.layout.n
    va = PermGroup(list(out.V.generators) + [out.a], degree=n)
    rep.add("<V,a> transitive on Omega", len(va.orbit(0)) == n)
    rep.add("<V,a> primitive on Omega", is_primitive(va))
    order = out.G.order()
    full = math.factorial(n)
    odd = any(g.sign() == -1 for g in out.G.generators)
    which = "Sym" if order == full else "Alt" if order * 2 == full else "other"
    rep.add("|<H,a>| is n!/2 or n!", which != "other", f"|G| = {order}")
    rep.add("parity of generators matches", (which == "Sym") == odd,
            "an odd generator is present" if odd else "all generators even")
    rep.values.update(n=n, order_G=order, G=which, order_Va=va.order())
    return rep


def verify_theorem3(out: ConstructionOutput, analysis=None) -> VerifyReport:
    from .local import LocalAnalysis

    rep = VerifyReport("thm3")
    lay = out.layout
    r, s, m = lay.r, lay.s, lay.m
    la = analysis or LocalAnalysis.of(out.spec)
    rho, rho0 = out.order_R, out.order_R_stab
    gx1 = la.kernel("x", 1)
    arc = la.arc_kernel
    rep.add("valency = rs", la.valency == r * s, f"valency {la.valency}")
    want1 = rho ** (s * (m - 1)) * rho0
    rep.add("|G_x^[1]| = |R|^(s(m-1)) |R_(r-1)|", gx1.order() == want1,
            f"{gx1.order()} vs {want1}")
    rep.add("G_x^[1] = L", gx1.same_group(out.L))
    want2 = rho ** (s * (m - 2) + 1)
    rep.add("|G_xy^[1]| = |R|^(s(m-2)+1)", arc.order() == want2, f"{arc.order()} vs {want2}")
    witness_gens = list(out.gens.R_Y[(0, 1)])
    for j in range(2, m):
        for i in range(s):
            witness_gens += out.gens.R_Y[(i, j)]
    witness = PermGroup(witness_gens, degree=lay.n)
    rep.add("G_xy^[1] = <R(Y_(0,1)), R(Y_(i,j)) : j >= 2>", witness.same_group(arc))
    rep.values.update(valency=la.valency, order_Gx1=gx1.order(), order_arc_kernel=arc.order())
    return rep


# -- default parameter sets ---------------------------------------------------

DEFAULT_TRIPLES = {
    "c2c2m3": ("C2", "C2", 3),
    "c2c2m5": ("C2", "C2", 5),
    "s3c2m3": ("S3", "C2", 3),
    "c3c3m3": ("C3", "C3", 3),
}

_NAMED = {"C2": lambda: _cyclic(2), "C3": lambda: _cyclic(3), "S3": lambda: _symmetric(3)}


def default_params(name: str) -> ConstructionParams:
    rn, sn, m = DEFAULT_TRIPLES[name]
    return ConstructionParams(_NAMED[rn](), _NAMED[sn](), m, name)
