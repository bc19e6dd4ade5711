"""Named example graphs with expected local invariants, and the corpus runner."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .chain import EnumerationBoundExceeded, PermGroup
from .construction import (
    DEFAULT_TRIPLES,
    build_groups,
    default_params,
    verify_lemma1,
    verify_lemma2,
    verify_theorem3,
)
from .coset import CapExceeded, CosetGraphSpec, ExplicitGraph, validate_spec
from .local import FAIL, PASS, SKIP, UNDETERMINED, LocalAnalysis, p_label
from .perm import Permutation
from .props import invariant_signature

__all__ = ["CorpusEntry", "corpus_build", "run_entry", "run_corpus"]


@dataclass
class CorpusEntry:
    name: str
    source: str                      # "coset-spec", "explicit-graph" or "construction-params"
    build: Callable
    expected: dict = field(default_factory=dict)
    basis: dict = field(default_factory=dict)   # key -> "formula", "computed" or "trivial"
    semiprimitive: bool = False      # member of the locally semiprimitive sub-corpus


def _cycle(n: int) -> Permutation:
    return Permutation([(i + 1) % n for i in range(n)])


def _transposition(n: int, i: int, j: int) -> Permutation:
    img = list(range(n))
    img[i], img[j] = j, i
    return Permutation(img)


def complete_graph_spec(n: int) -> CosetGraphSpec:
    """K_n as Cos(Sym(n), Sym(n-1), (0 n-1))."""
    G = PermGroup([_cycle(n), _transposition(n, 0, 1)], degree=n)
    sub = [Permutation(list(range(1, n - 1)) + [0, n - 1]), _transposition(n, 0, 1)]
    return CosetGraphSpec(G, sub, _transposition(n, 0, n - 1))


def cycle_graph_spec(n: int) -> CosetGraphSpec:
    """C_n as Cos(D_2n, <reflection>, rotation)."""
    rot = _cycle(n)
    refl = Permutation([(-i) % n for i in range(n)])
    return CosetGraphSpec(PermGroup([rot, refl], degree=n), [refl], rot)


def petersen_graph() -> ExplicitGraph:
    """Kneser graph on the 2-subsets of {0..4} with Sym(5) induced."""
    verts = list(combinations(range(5), 2))
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[v]) for u, v in combinations(verts, 2) if not set(u) & set(v)]

    def induced(p):
        return [index[tuple(sorted((p[u], p[v])))] for u, v in verts]

    return ExplicitGraph(10, edges, [induced(_cycle(5)), induced(_transposition(5, 0, 1))])


def cube_graph() -> ExplicitGraph:
    """Q3 on {0..7} with its full automorphism group of order 48."""
    edges = [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)]

    def coords(perm):
        return [sum(((u >> perm[b]) & 1) << b for b in range(3)) for u in range(8)]

    gens = [coords([1, 2, 0]), coords([1, 0, 2]), [u ^ 1 for u in range(8)]]
    return ExplicitGraph(8, edges, gens)


def _trivial_kernels(valency: int, gx1: int = 1) -> tuple:
    exp = {"valency": valency, "local_primitive": True, "order_Gx1": gx1, "order_arc_kernel": 1,
           "hypothesis1": PASS, "theorem1": PASS}
    basis = {k: "computed" for k in exp}
    return exp, basis


def corpus_build() -> list:
    entries = []
    for n in (4, 5):
        exp, basis = _trivial_kernels(n - 1)
        basis = {k: "trivial" for k in basis}
        entries.append(CorpusEntry(f"k{n}", "coset-spec", lambda n=n: complete_graph_spec(n),
                                   exp, basis, semiprimitive=True))
    for n in (5, 6):
        exp, basis = _trivial_kernels(2)
        entries.append(CorpusEntry(f"c{n}", "coset-spec", lambda n=n: cycle_graph_spec(n),
                                   exp, basis, semiprimitive=True))
    exp, basis = _trivial_kernels(3, gx1=2)
    entries.append(CorpusEntry("petersen", "explicit-graph", petersen_graph, exp, basis,
                               semiprimitive=True))
    exp, basis = _trivial_kernels(3)
    exp["order_Gx"] = 6
    basis["order_Gx"] = "computed"
    entries.append(CorpusEntry("q3", "explicit-graph", cube_graph, exp, basis,
                               semiprimitive=True))

    formulas = {
        "c2c2m3": {"n": 13, "valency": 4, "order_Gx": 128, "order_Gx1": 16, "order_arc_kernel": 8,
                   "order_G": 6227020800, "arc_kernel_p": "2"},
        "c2c2m5": {"n": 21, "valency": 4, "order_Gx1": 256, "order_arc_kernel": 128,
                   "arc_kernel_p": "2"},
        "s3c2m3": {"n": 20, "valency": 6, "order_Gx": 186624, "order_Gx1": 2592,
                   "order_arc_kernel": 216, "arc_kernel_p": "not a p-group",
                   "local_order": 72, "local_block_sizes": [3]},
        "c3c3m3": {"n": 29, "valency": 9, "order_Gx": 59049, "order_Gx1": 729,
                   "order_arc_kernel": 81, "arc_kernel_p": "3"},
    }
    for name in DEFAULT_TRIPLES:
        exp = dict(formulas[name])
        basis = {k: "formula" for k in exp}
        exp.update(cond_i=FAIL, theorem1=SKIP, lemma1=PASS, lemma2=PASS, thm3=PASS)
        basis.update(cond_i="computed", theorem1="computed", lemma1="formula", lemma2="formula",
                     thm3="formula")
        entries.append(CorpusEntry(name, "construction-params",
                                   lambda name=name: default_params(name), exp, basis))
    return sorted(entries, key=lambda e: e.name)


# -- running ----------------------------------------------------------------

def _observe(la: LocalAnalysis) -> dict:
    hyp = la.hypothesis
    status, _ = la.conformance
    return {
        "valency": la.valency,
        "order_Gx": la.gx.order(),
        "order_Gx1": la.kernel("x", 1).order(),
        "order_arc_kernel": la.arc_kernel.order(),
        "arc_kernel_p": p_label(la.arc_kernel_p),
        "local_primitive": la.local_class.primitive,
        "local_order": la.local_action.order(),
        "hypothesis1": hyp.status,
        "cond_i": hyp.cond_i,
        "theorem1": status,
    }


def run_entry(entry: CorpusEntry, bound: int | None = None) -> dict:
    """Analyse one entry and compare with its expected block."""
    result = {"name": entry.name, "source": entry.source}
    try:
        obj = entry.build()
        verify = {}
        if entry.source == "construction-params":
            out = build_groups(obj)
            spec = out.spec
            la = LocalAnalysis.of(spec, bound=bound)
            verify["lemma1"] = verify_lemma1(out)
            verify["lemma2"] = verify_lemma2(out)
            verify["thm3"] = verify_theorem3(out, la)
        else:
            if isinstance(obj, CosetGraphSpec):
                check = validate_spec(obj)
                if not check.ok:
                    result.update(status=FAIL, failures=check.failures)
                    return result
            la = LocalAnalysis.of(obj, bound=bound)
        observed = _observe(la)
        if entry.source == "construction-params":
            observed["n"] = out.layout.n
            observed["order_G"] = out.G.order()
            observed["local_block_sizes"] = list(invariant_signature(la.local_action).block_sizes)
            for fam, rep in verify.items():
                observed[fam] = PASS if rep.ok else FAIL
        report = la.report()
    except (EnumerationBoundExceeded, CapExceeded) as exc:
        result.update(status=UNDETERMINED, failures=[str(exc)])
        return result
    mismatches = []
    for key, want in entry.expected.items():
        got = observed.get(key)
        if got != want:
            mismatches.append(f"{key}: expected {want!r} ({entry.basis.get(key, 'computed')}), "
                              f"got {got!r}")
    if report["theorem1_conformance"]["status"] == FAIL:
        mismatches.append("theorem1: " + report["theorem1_conformance"]["reason"])
    result.update(
        status=FAIL if mismatches else PASS,
        failures=mismatches,
        observed={k: str(v) if isinstance(v, int) and not isinstance(v, bool) else v
                  for k, v in observed.items()},
        report=report,
    )
    return result


def run_corpus(name_filter: str | None = None, jobs: int = 1, bound: int | None = None) -> list:
    entries = [e for e in corpus_build() if not name_filter or name_filter in e.name]
    if jobs > 1 and len(entries) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_named, [(e.name, bound) for e in entries]))
    else:
        results = [run_entry(e, bound) for e in entries]
    return sorted(results, key=lambda r: r["name"])


def _run_named(args) -> dict:
    name, bound = args
    entry = next(e for e in corpus_build() if e.name == name)
    return run_entry(entry, bound)
