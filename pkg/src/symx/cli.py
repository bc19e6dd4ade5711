"""Command-line entry point.

Exit codes: 0 all checks pass, 1 at least one failure, 2 usage or input
error, 3 only undetermined outcomes besides passes.
"""

from __future__ import annotations

import argparse
import sys

from .chain import EnumerationBoundExceeded
from .construction import ConstructionError, build_groups, verify_lemma1, verify_lemma2, verify_theorem3
from .corpus import corpus_build, run_corpus
from .coset import CapExceeded, CosetGraphSpec, validate_spec
from .io import InputError, construction_to_json, dump_json, load_json, source_from_json
from .local import FAIL, SKIP, UNDETERMINED, LocalAnalysis

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNDETERMINED = 0, 1, 2, 3


def _exit_code(statuses) -> int:
    statuses = list(statuses)
    if FAIL in statuses:
        return EXIT_FAIL
    if UNDETERMINED in statuses:
        return EXIT_UNDETERMINED
    return EXIT_OK


def _load_source(path, want=None):
    kind, obj = source_from_json(load_json(path))
    if want and kind not in want:
        raise InputError(f"{path}: expected {' or '.join(want)}, got {kind}")
    return kind, obj


def _spec_for(kind, obj):
    """A coset spec or explicit graph to analyse, building the construction if needed."""
    if kind == "construction-params":
        return build_groups(obj).spec
    return obj


def cmd_construct(args) -> int:
    _, params = _load_source(args.params, ["construction-params"])
    out = build_groups(params)
    data = construction_to_json(out)
    dump_json(data, args.out)
    lay = out.layout
    print(f"n = {lay.n}; |H| = {out.H.order()}; |K| = {out.K.order()}; |L| = {out.L.order()}; "
          f"|G| = {out.G.order()}")
    print(f"a = {out.a}")
    print(f"wrote {args.out}")
    return EXIT_OK


def _validation_failure(spec, report_path) -> int | None:
    if not isinstance(spec, CosetGraphSpec):
        return None
    check = validate_spec(spec)
    if check.ok:
        return None
    for f in check.failures:
        print(f"FAIL {f}")
    if report_path:
        dump_json({"validation": check.as_dict()}, report_path)
    return EXIT_FAIL


def cmd_analyze(args) -> int:
    kind, obj = _load_source(args.spec)
    spec = _spec_for(kind, obj)
    bad = _validation_failure(spec, args.report)
    if bad is not None:
        return bad
    la = LocalAnalysis.of(spec)
    report = la.report()
    if isinstance(spec, CosetGraphSpec):
        report = {"validation": validate_spec(spec).as_dict(), **report}
    if args.report:
        dump_json(report, args.report)
    _print_summary(report)
    status = report["theorem1_conformance"]["status"]
    if status == SKIP and report["hypothesis1"]["status"] == UNDETERMINED:
        return EXIT_UNDETERMINED
    return EXIT_FAIL if status == FAIL else EXIT_OK


def _print_summary(report: dict) -> None:
    o = report["orders"]
    la = report["local_action"]
    print(f"valency {report['valency']}; local action order {la['order']}, "
          f"primitive={la['primitive']} semiprimitive={la['semiprimitive']}")
    print(f"|G_x| = {o['G_x']}; |G_x^[1]| = {o['G_x^[1]']}; |G_x^[2]| = {o['G_x^[2]']}; "
          f"|G_x^[3]| = {o['G_x^[3]']}; |G_xy^[1]| = {o['G_xy^[1]']} ({report['arc_kernel_p']})")
    hyp = report["hypothesis1"]
    print(f"hypothesis 1: {hyp['status']} (cond i {hyp['cond_i']}, cond ii {hyp['cond_ii']})")
    v = report["tw_verdict"]
    print(f"dichotomy branch: {v['branch']}; F* clause: {v['fstar_clause']}")
    t = report["theorem1_conformance"]
    print(f"conformance: {t['status']} ({t['reason']})")


def cmd_verify(args) -> int:
    path = args.params or args.spec
    if path is None:
        raise InputError("verify needs --params or --spec")
    kind, obj = _load_source(path)
    fam = args.family
    if fam in ("lemma1", "lemma2", "thm3"):
        if kind != "construction-params":
            raise InputError(f"--family {fam} needs construction parameters (--params)")
        out = build_groups(obj)
        rep = {"lemma1": verify_lemma1, "lemma2": verify_lemma2, "thm3": verify_theorem3}[fam](out)
        data = rep.as_dict()
        for name, ok, detail in rep.checks:
            print(f"{'PASS' if ok else 'FAIL'} {name}" + (f" [{detail}]" if detail else ""))
        for k, v in data["values"].items():
            print(f"  {k} = {v}")
        if args.report:
            dump_json(data, args.report)
        return EXIT_OK if rep.ok else EXIT_FAIL

    spec = _spec_for(kind, obj)
    bad = _validation_failure(spec, args.report)
    if bad is not None:
        return bad
    la = LocalAnalysis.of(spec)
    if fam == "hyp1":
        hyp = la.hypothesis
        data = {"family": fam, **hyp.as_dict()}
        print(f"hypothesis 1: {hyp.status}; cond i {hyp.cond_i}; cond ii {hyp.as_dict()['cond_ii']}")
        code = _exit_code([hyp.status])
    else:
        status, reason = la.conformance
        data = {"family": fam, "status": status, "reason": reason,
                "tw_verdict": la.verdict.as_dict(), "hypothesis1": la.hypothesis.status}
        print(f"theorem 1 conformance: {status} ({reason})")
        if status == SKIP and la.hypothesis.status == UNDETERMINED:
            code = EXIT_UNDETERMINED
        else:
            code = EXIT_FAIL if status == FAIL else EXIT_OK
    if args.report:
        dump_json(data, args.report)
    return code


def cmd_corpus(args) -> int:
    if args.action == "list":
        for e in corpus_build():
            print(f"{e.name}\t{e.source}")
        return EXIT_OK
    results = run_corpus(args.filter, jobs=args.jobs)
    if not results:
        raise InputError(f"no corpus entry matches {args.filter!r}")
    for r in results:
        print(f"{r['status'].upper():13s} {r['name']}")
        for f in r.get("failures", []):
            print(f"    {f}")
    if args.report:
        dump_json(results, args.report)
    return _exit_code(r["status"] for r in results)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symx", description="Local analysis of arc-transitive "
                                     "graphs given by coset presentations or explicitly.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build the wreath-product coset graph from parameters")
    p.add_argument("--params", required=True, help="parameters JSON")
    p.add_argument("--out", required=True, help="where to write the coset spec JSON")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", help="full local report for a coset spec or explicit graph")
    p.add_argument("--spec", required=True)
    p.add_argument("--report", help="write the JSON report here")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run one verification family")
    p.add_argument("--family", required=True, choices=["lemma1", "lemma2", "thm3", "thm1", "hyp1"])
    src = p.add_mutually_exclusive_group()
    src.add_argument("--spec")
    src.add_argument("--params")
    p.add_argument("--report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corpus", help="run or list the built-in example corpus")
    p.add_argument("action", choices=["run", "list"])
    p.add_argument("--filter", help="substring of entry names to keep")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EnumerationBoundExceeded, CapExceeded) as exc:
        print(f"undetermined: {exc}", file=sys.stderr)
        return EXIT_UNDETERMINED
    except ConstructionError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
