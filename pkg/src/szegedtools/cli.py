"""Command-line front end: compute, build, enumerate, search, verify.

Exit codes are a stable contract: 0 success, 1 claim violation, 2 parse or
usage error, 3 disconnected input, 4 infeasible parameters, 5 enumeration
cap exceeded.  JSON output always carries a meta block with the tool
version, seed, worker count, and wall time; everything except the wall time
is byte-for-byte reproducible for a fixed seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from typing import Sequence

from .enumeration import (
    ABSOLUTE_CAP,
    count_cacti,
    enumerate_cacti,
    search_extremal,
)
from .errors import (
    CapError,
    DisconnectedError,
    FormatError,
    InfeasibleError,
    InvalidGraphError,
)
from .families import (
    BundleSpec,
    bundle,
    cycle,
    path,
    quadrangle_bundle,
    star,
    tailed_quadrangle_bundle,
    triangle_bundle,
)
from .formats import emit_graph6, parse_edge_list, parse_graph6
from .graphs import Graph
from .indices import edge_partitions, edge_revised_szeged, szeged, wiener
from .verify import (
    CLAIM_IDS,
    Universe,
    VerificationReport,
    feasible_pairs,
    verify_bundle_floor_claim,
    verify_cycle_gap_claim,
    verify_inner_cut_edge_claim,
    verify_inner_cycle_claim,
    verify_minimum_exhaustive,
    verify_minimum_formula,
    verify_off_quadrangle_claim,
    verify_pendant_edge_claim,
    verify_second_minimum,
)

from . import __version__ as TOOL_VERSION

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_DISCONNECTED = 3
EXIT_INFEASIBLE = 4
EXIT_CAP = 5


def _env_cap() -> int | None:
    raw = os.environ.get("SZEGED_MAX_N")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise FormatError(f"SZEGED_MAX_N must be an integer, got {raw!r}")
    return min(value, ABSOLUTE_CAP)


def _cap_from(args) -> int | None:
    if getattr(args, "cap", None) is not None:
        return min(args.cap, ABSOLUTE_CAP)
    return _env_cap()


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="szegedtools",
        description="Exact Szeged-type index workbench for cactus graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser(
        "compute", help="indices of one graph (or a graph6 stream)"
    )
    src = p_compute.add_mutually_exclusive_group(required=True)
    src.add_argument("--g6", help="graph6 string")
    src.add_argument("--file", help="edge list file: first line 'n m', then edges")
    src.add_argument(
        "--stdin", action="store_true", help="read graph6 lines from standard input"
    )
    p_compute.add_argument(
        "--edges", action="store_true", help="include per-edge partitions"
    )
    p_compute.add_argument(
        "--format", choices=("json", "csv", "human"), default="json"
    )

    p_build = sub.add_parser("build", help="construct a named family, print graph6")
    p_build.add_argument(
        "family",
        choices=("c0", "c1", "g_star_1", "bundle", "cycle", "path", "star"),
    )
    p_build.add_argument("--n", type=int, help="vertex count (cycle: length)")
    p_build.add_argument("--k", type=int, help="cycle count")
    p_build.add_argument("--lengths", help="bundle cycle lengths, e.g. 3,4,4")
    p_build.add_argument("--pendants", type=int, default=0)
    p_build.add_argument("--format", choices=("g6", "json"), default="g6")

    p_enum = sub.add_parser("enumerate", help="stream all cacti at (n, k)")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--k", type=int, required=True)
    p_enum.add_argument(
        "--labeled", action="store_true", help="labeled graphs, not classes"
    )
    p_enum.add_argument("--count", action="store_true", help="count only")
    p_enum.add_argument("--workers", type=int, default=1)
    p_enum.add_argument("--cap", type=int)
    p_enum.add_argument(
        "--format", choices=("g6", "json", "csv"), default="g6"
    )

    p_search = sub.add_parser(
        "search", help="exhaustive extremal search over one class"
    )
    p_search.add_argument("--n", type=int, required=True)
    p_search.add_argument("--k", type=int, required=True)
    p_search.add_argument(
        "--second", action="store_true", help="include the runner-up"
    )
    p_search.add_argument(
        "--expect-thm32",
        action="store_true",
        help="exit nonzero unless the minimum matches the closed form",
    )
    p_search.add_argument(
        "--expect-thm44",
        action="store_true",
        help="exit nonzero if the runner-up contradicts the closed form",
    )
    p_search.add_argument("--workers", type=int, default=1)
    p_search.add_argument("--cap", type=int)
    p_search.add_argument("--format", choices=("json", "human"), default="json")

    p_verify = sub.add_parser("verify", help="run one claim's verification")
    p_verify.add_argument("claim", choices=CLAIM_IDS)
    p_verify.add_argument("--max-n", type=int, help="sweep all feasible (n,k)")
    p_verify.add_argument("--n", type=int, help="single universe: vertex count")
    p_verify.add_argument("--k", type=int, help="single universe: cycle count")
    p_verify.add_argument(
        "--m", type=int, help="formula-level audit at this edge count (with --k)"
    )
    p_verify.add_argument("--samples", type=int, default=0)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--sample-max-n", type=int, default=40)
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.add_argument("--cap", type=int)
    p_verify.add_argument("--format", choices=("json", "human"), default="json")

    return parser


def _meta(args, started: float) -> dict:
    return {
        "tool_version": TOOL_VERSION,
        "seed": getattr(args, "seed", None),
        "workers": getattr(args, "workers", 1),
        "wall_ms": int((time.monotonic() - started) * 1000),
    }


def _print_json(payload: dict, args, started: float) -> None:
    body = dict(payload)
    body["meta"] = _meta(args, started)
    print(json.dumps(body, sort_keys=True))


def _graph_report(g: Graph, source: str, with_edges: bool) -> dict:
    value = edge_revised_szeged(g)
    report = {
        "graph6": emit_graph6(g),
        "source": source,
        "n": g.n,
        "m": len(g.edges),
        "wiener": wiener(g),
        "szeged": szeged(g),
        "edge_revised_szeged": value.to_dict(),
        "edge_revised_szeged_decimal": value.as_decimal(),
    }
    if with_edges:
        report["edges"] = [
            {"edge": [u, v], "m_u": p.m_u, "m_v": p.m_v, "m_0": p.m_0}
            for (u, v), p in zip(g.edges, edge_partitions(g))
        ]
    return report


def _compute_inputs(args) -> list[tuple[str, Graph]]:
    if args.g6 is not None:
        return [(args.g6, parse_graph6(args.g6))]
    if args.file is not None:
        try:
            with open(args.file, "r", encoding="ascii") as handle:
                text = handle.read()
        except OSError as exc:
            raise FormatError(f"cannot read {args.file}: {exc}")
        return [(args.file, parse_edge_list(text))]
    graphs = []
    for line in sys.stdin:
        line = line.strip()
        if line:
            graphs.append((line, parse_graph6(line)))
    if not graphs:
        raise FormatError("no graph6 lines on standard input")
    return graphs


_COMPUTE_CSV_FIELDS = (
    "graph6",
    "n",
    "m",
    "wiener",
    "szeged",
    "edge_revised_szeged_num",
    "edge_revised_szeged_den",
    "edge_revised_szeged_decimal",
)


def _compute_csv_row(report: dict) -> list:
    return [
        report["graph6"],
        report["n"],
        report["m"],
        report["wiener"],
        report["szeged"],
        report["edge_revised_szeged"]["num"],
        report["edge_revised_szeged"]["den"],
        report["edge_revised_szeged_decimal"],
    ]


def _cmd_compute(args, started: float) -> int:
    reports = [
        _graph_report(g, source, args.edges) for source, g in _compute_inputs(args)
    ]
    if args.format == "json":
        _print_json({"results": reports}, args, started)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(_COMPUTE_CSV_FIELDS)
        for report in reports:
            writer.writerow(_compute_csv_row(report))
        sys.stdout.write(buf.getvalue())
    else:
        for report in reports:
            print(f"graph {report['graph6']}: n={report['n']} m={report['m']}")
            print(f"  wiener               {report['wiener']}")
            print(f"  szeged               {report['szeged']}")
            print(
                "  edge revised szeged  "
                f"{report['edge_revised_szeged']['num']}/4 "
                f"= {report['edge_revised_szeged_decimal']}"
            )
            for entry in report.get("edges", ()):
                u, v = entry["edge"]
                print(
                    f"  edge ({u},{v}): m_u={entry['m_u']} "
                    f"m_v={entry['m_v']} m_0={entry['m_0']}"
                )
    return EXIT_OK


def _require(args, names: Sequence[str]) -> None:
    missing = [f"--{x}" for x in names if getattr(args, x) is None]
    if missing:
        raise FormatError(f"{args.family} requires {', '.join(missing)}")


def _cmd_build(args, started: float) -> int:
    try:
        if args.family == "c0":
            _require(args, ("n", "k"))
            g = triangle_bundle(args.n, args.k)
        elif args.family == "c1":
            _require(args, ("n", "k"))
            g = quadrangle_bundle(args.n, args.k)
        elif args.family == "g_star_1":
            _require(args, ("n", "k"))
            g = tailed_quadrangle_bundle(args.n, args.k)
        elif args.family == "bundle":
            if args.lengths is None:
                raise FormatError("bundle requires --lengths")
            try:
                lengths = tuple(int(x) for x in args.lengths.split(",") if x)
            except ValueError:
                raise FormatError(f"bad --lengths value: {args.lengths!r}")
            g = bundle(BundleSpec(cycle_lengths=lengths, pendants=args.pendants))
        elif args.family == "cycle":
            _require(args, ("n",))
            g = cycle(args.n)
        elif args.family == "path":
            _require(args, ("n",))
            g = path(args.n)
        else:
            _require(args, ("n",))
            g = star(args.n)
    except InvalidGraphError as exc:
        raise InfeasibleError(str(exc))
    line = emit_graph6(g)
    if args.format == "json":
        _print_json(
            {"graph6": line, "n": g.n, "m": len(g.edges), "family": args.family},
            args,
            started,
        )
    else:
        print(line)
    return EXIT_OK


def _cmd_enumerate(args, started: float) -> int:
    cap = _cap_from(args)
    if args.count:
        total = (
            count_cacti(args.n, args.k, workers=args.workers, cap=cap)
            if not args.labeled
            else sum(
                1
                for _ in enumerate_cacti(
                    args.n, args.k, dedup=False, cap=cap
                )
            )
        )
        if args.format == "json":
            _print_json({"n": args.n, "k": args.k, "count": total}, args, started)
        else:
            print(total)
        return EXIT_OK
    stream = enumerate_cacti(
        args.n, args.k, dedup=not args.labeled, workers=args.workers, cap=cap
    )
    if args.format == "json":
        lines = [emit_graph6(g) for g in stream]
        _print_json(
            {"n": args.n, "k": args.k, "count": len(lines), "classes": lines},
            args,
            started,
        )
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(_COMPUTE_CSV_FIELDS)
        for g in stream:
            writer.writerow(_compute_csv_row(_graph_report(g, "enumerate", False)))
        sys.stdout.write(buf.getvalue())
    else:
        for g in stream:
            print(emit_graph6(g))
    return EXIT_OK


def _cmd_search(args, started: float) -> int:
    report = search_extremal(
        args.n, args.k, workers=args.workers, cap=_cap_from(args)
    )
    payload = report.to_dict()
    if not args.second:
        payload.pop("second_value", None)
        payload.pop("second_witnesses", None)
        payload.pop("second_case", None)
        payload.pop("second_agrees", None)
    code = EXIT_OK
    if args.expect_thm32 and report.minimum_agrees is not True:
        code = EXIT_VIOLATION
    if args.expect_thm44 and report.second_agrees is False:
        code = EXIT_VIOLATION
    if args.format == "json":
        _print_json(payload, args, started)
    else:
        print(
            f"(n,k)=({report.n},{report.k}): {report.class_count} classes, "
            f"minimum {report.min_value} "
            f"({len(report.min_witnesses)} witness(es))"
        )
        if args.second:
            if report.second_value is None:
                print("  no second value (single class or all tied)")
            else:
                print(
                    f"  second {report.second_value} "
                    f"({len(report.second_witnesses)} witness(es))"
                )
        if report.minimum_agrees is not None:
            print(f"  closed-form minimum agrees: {report.minimum_agrees}")
        for note in report.notes:
            print(f"  note: {note}")
    return code


def _merge_reports(reports: list[VerificationReport]) -> VerificationReport:
    if len(reports) == 1:
        return reports[0]
    violations = []
    findings = []
    fwd = []
    bwd = []
    checked = 0
    for rep in reports:
        checked += rep.checked
        violations.extend(rep.violations)
        prefix = rep.universe
        findings.extend(f"{prefix}: {f}" for f in rep.findings)
        if rep.equality_audit:
            fwd.extend(rep.equality_audit["fwd"]["failures"])
            bwd.extend(rep.equality_audit["bwd"]["failures"])
    return VerificationReport(
        claim=reports[0].claim,
        universe="; ".join(rep.universe for rep in reports),
        checked=checked,
        violations=tuple(violations),
        equality_audit={
            "fwd": {"statement": "merged", "failures": fwd},
            "bwd": {"statement": "merged", "failures": bwd},
        },
        findings=tuple(findings),
        seed=reports[0].seed,
    )


def _cmd_verify(args, started: float) -> int:
    claim = args.claim
    lemma_runners = {
        "lemma2.1": verify_pendant_edge_claim,
        "lemma2.2-2.3": verify_cycle_gap_claim,
        "lemma3.1": verify_bundle_floor_claim,
        "lemma4.1": verify_inner_cut_edge_claim,
        "lemma4.2": verify_off_quadrangle_claim,
        "lemma4.3": verify_inner_cycle_claim,
    }
    if claim in lemma_runners:
        if args.max_n is None and not args.samples:
            raise FormatError(f"verify {claim} needs --max-n and/or --samples")
        universe = Universe(
            pairs=feasible_pairs(args.max_n) if args.max_n is not None else (),
            samples=args.samples,
            sample_max_n=args.sample_max_n,
            seed=args.seed,
        )
        report = lemma_runners[claim](universe, workers=args.workers)
    elif claim == "thm3.2":
        if args.m is not None:
            if args.k is None:
                raise FormatError("verify thm3.2 --m needs --k")
            report = verify_minimum_formula(args.m, args.k)
        elif args.n is not None:
            if args.k is None:
                raise FormatError("verify thm3.2 --n needs --k")
            report = verify_minimum_exhaustive(args.n, args.k, workers=args.workers)
        elif args.max_n is not None:
            reports = [
                verify_minimum_exhaustive(n, k, workers=args.workers)
                for n, k in feasible_pairs(args.max_n)
            ]
            report = _merge_reports(reports)
        else:
            raise FormatError("verify thm3.2 needs --max-n, --n/--k, or --m/--k")
    else:
        if args.n is None or args.k is None:
            raise FormatError("verify thm4.4 needs --n and --k")
        report = verify_second_minimum(
            args.n,
            args.k,
            samples=args.samples or 10_000,
            seed=args.seed,
            workers=args.workers,
            cap=_cap_from(args),
        )
    if args.format == "json":
        _print_json({"report": report.to_dict()}, args, started)
    else:
        status = "PASS" if report.passed else "FAIL"
        print(f"{report.claim}: {status} ({report.checked} checked, "
              f"{len(report.violations)} violations)")
        print(f"  universe: {report.universe}")
        for v in report.violations:
            print(f"  violation: {v}")
        for f in report.findings:
            print(f"  finding: {f}")
    return EXIT_OK if report.passed else EXIT_VIOLATION


def main(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    started = time.monotonic()
    handlers = {
        "compute": _cmd_compute,
        "build": _cmd_build,
        "enumerate": _cmd_enumerate,
        "search": _cmd_search,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args, started)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DisconnectedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except InfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except CapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InvalidGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    run()
