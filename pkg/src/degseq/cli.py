"""Command-line front end.

Four command groups: `seq` for single-sequence questions, `potential` for
realization-with-subgraph decisions, `sigma` for thresholds (closed form and
exact brute force), and `verify` for the built-in verification suites.
Reports are deterministic for a fixed seed and format, independent of
--threads.  Exit codes: 0 computed or verified, 1 counterexample found,
2 usage, constraint, or work-bound trouble.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .errors import DegseqError
from .extremal import (
    DEFAULT_WORK_BOUND,
    brute_force_sigma,
    proof_path_audit,
    sigma_formula,
    verify_lower_bound,
)
from .graphs import (
    PatternSpec,
    build_removed_pattern,
    cycle_graph,
    degree_sequence_census,
    disjoint_union,
    format_graph,
    parse_graph,
    path_graph,
)
from .potential import CONDITION_IDS, WorkBudget, condition_audit, is_potentially_subgraph
from .sequences import (
    DegreeSequence,
    candidate_sequences,
    enumerate_graphic_sequences,
    erdos_gallai_margins,
    format_sequence,
    havel_hakimi_realize,
    is_graphic,
    layoff,
    parse_sequence,
)


@dataclass(frozen=True)
class RunConfig:
    """Shared knobs collected from the parsed arguments."""

    format: str = "text"
    threads: int = 1
    seed: int = 0
    work_bound: int = DEFAULT_WORK_BOUND
    strict: bool = False
    exclude_zero_terms: bool = False

    def __post_init__(self) -> None:
        if self.threads < 1:
            raise ValueError("need threads >= 1")
        if self.work_bound < 1:
            raise ValueError("need work_bound >= 1")


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        format=getattr(args, "format", "text"),
        threads=getattr(args, "threads", 1),
        seed=getattr(args, "seed", 0),
        work_bound=getattr(args, "work_bound", DEFAULT_WORK_BOUND),
        strict=getattr(args, "strict", False),
        exclude_zero_terms=getattr(args, "exclude_zero_terms", False),
    )


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _bool_text(flag: bool) -> str:
    return "true" if flag else "false"


def _add_pattern_source(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group(
        "pattern source (exactly one)",
        "a complete graph with removed edges via --r/--k/--t, a graph file, or a shorthand",
    )
    group.add_argument("--r", type=int, help="clique on r+1 vertices before removals")
    group.add_argument("--k", type=int, help="number of removed two-edge paths")
    group.add_argument("--t", type=int, help="number of removed disjoint edges")
    group.add_argument("--pattern", metavar="FILE", help="graph file to use as the pattern")
    group.add_argument("--pattern-c4", action="store_true", help="four-cycle")
    group.add_argument("--pattern-2k2", action="store_true", help="two disjoint edges")
    group.add_argument("--pattern-p2", action="store_true", help="two-edge path")


def _resolve_pattern(args: argparse.Namespace, parser: argparse.ArgumentParser):
    spec_given = any(v is not None for v in (args.r, args.k, args.t))
    sources = sum(
        [
            spec_given,
            args.pattern is not None,
            args.pattern_c4,
            args.pattern_2k2,
            args.pattern_p2,
        ]
    )
    if sources != 1:
        parser.error(
            "give exactly one pattern source: --r/--k/--t together, --pattern FILE, "
            "or one of --pattern-c4/--pattern-2k2/--pattern-p2"
        )
    if spec_given:
        if None in (args.r, args.k, args.t):
            parser.error("--r, --k and --t must be given together")
        spec = PatternSpec(args.r, args.k, args.t)
        return build_removed_pattern(spec), spec.label()
    if args.pattern is not None:
        path = Path(args.pattern)
        return parse_graph(path.read_text(encoding="utf-8")), path.stem
    if args.pattern_c4:
        return cycle_graph(4), "C4"
    if args.pattern_2k2:
        return disjoint_union(path_graph(1), path_graph(1)), "2K2"
    return path_graph(2), "P2"


def _cmd_seq_check(args, parser) -> int:
    pi = parse_sequence(args.sequence)
    print(f"graphic: {_bool_text(is_graphic(pi))}")
    margins = erdos_gallai_margins(pi)
    print(f"margins: {','.join(str(m) for m in margins)}")
    return 0


def _cmd_seq_realize(args, parser) -> int:
    pi = parse_sequence(args.sequence)
    g = havel_hakimi_realize(pi)
    if g is None:
        print("NOT GRAPHIC")
        return 0
    sys.stdout.write(format_graph(g))
    return 0


def _cmd_seq_layoff(args, parser) -> int:
    pi = parse_sequence(args.sequence)
    print(format_sequence(layoff(pi, args.k)))
    return 0


def _cmd_potential_decide(args, parser) -> int:
    cfg = _config(args)
    pi = parse_sequence(args.seq)
    pattern, _ = _resolve_pattern(args, parser)
    decision = is_potentially_subgraph(pi, pattern, budget=WorkBudget(cfg.work_bound))
    print(_bool_text(decision.verdict))
    if decision.note:
        print(f"note: {decision.note}")
    if args.witness and decision.verdict:
        print("witness:")
        sys.stdout.write(format_graph(decision.witness))
        pairs = " ".join(f"{u + 1}->{v + 1}" for u, v in sorted(decision.embedding.items()))
        print(f"embedding: {pairs}")
    return 0


def _cmd_sigma_formula(args, parser) -> int:
    cfg = _config(args)
    value = sigma_formula(args.r, args.k, args.t, args.n, strict=cfg.strict)
    if not cfg.strict:
        for broken in PatternSpec(args.r, args.k, args.t).threshold_violations(args.n):
            print(f"warning: outside the proven range: {broken}", file=sys.stderr)
    print(value)
    return 0


def _cmd_sigma_brute(args, parser) -> int:
    cfg = _config(args)
    pattern, label = _resolve_pattern(args, parser)
    report = brute_force_sigma(
        pattern,
        args.n,
        pattern_label=label,
        exclude_zero_terms=cfg.exclude_zero_terms,
        threads=cfg.threads,
        work_bound=cfg.work_bound,
    )
    elapsed_ms = int(report.elapsed * 1000) if args.timings else None
    if cfg.format == "json":
        payload = {
            "pattern": report.pattern_label,
            "n": report.n,
            "threshold": report.threshold,
            "extremal_sequences": [list(s.entries) for s in report.extremal_sequences],
            "counts": report.counts,
            "elapsed_ms": elapsed_ms,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif cfg.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(
            ["pattern", "n", "threshold", "extremal_sequences", "enumerated", "graphic", "potential", "elapsed_ms"]
        )
        writer.writerow(
            [
                report.pattern_label,
                report.n,
                report.threshold,
                ";".join(" ".join(str(d) for d in s) for s in report.extremal_sequences),
                report.counts["enumerated"],
                report.counts["graphic"],
                report.counts["potential"],
                elapsed_ms if elapsed_ms is not None else "",
            ]
        )
    else:
        print(f"pattern: {report.pattern_label}")
        print(f"n: {report.n}")
        print(f"threshold: {report.threshold}")
        for s in report.extremal_sequences:
            print(f"extremal_sequence: {format_sequence(s)}")
        c = report.counts
        print(f"counts: enumerated={c['enumerated']} graphic={c['graphic']} potential={c['potential']}")
        if elapsed_ms is not None:
            print(f"elapsed_ms: {elapsed_ms}")
    return 0


def _cmd_verify_lemma31(args, parser) -> int:
    spec = PatternSpec(args.r, args.k, args.t)
    report = verify_lower_bound(spec, args.n)
    print("check: lemma31")
    print(f"pattern: {report.pattern_label}")
    print(f"n: {report.n}")
    print(f"sequence: {format_sequence(report.sequence)}")
    print(f"sequence_form: {'ok' if report.sequence_ok else 'MISMATCH'}")
    print(f"pattern_absent: {_bool_text(report.pattern_absent)}")
    print(f"sigma: {report.sigma}")
    print(f"expected_sigma: {report.expected_sigma}")
    print(f"result: {'PASS' if report.ok else 'FAIL'}")
    return 0 if report.ok else 1


def _cmd_verify_condition(args, parser) -> int:
    cfg = _config(args)
    report = condition_audit(
        args.id, args.r, args.n, threads=cfg.threads, work_bound=cfg.work_bound
    )
    print("check: condition")
    print(f"id: {report.condition_id}")
    print(f"r: {report.r}")
    print(f"n: {report.n}")
    print(f"sequences: {report.sequences}")
    print(f"hypothesis_holds: {report.hypothesis_holds}")
    for pi in report.counterexamples:
        print(f"counterexample: {format_sequence(pi)}")
    print(f"counterexamples: {len(report.counterexamples)}")
    print(f"result: {'PASS' if report.ok else 'FAIL'}")
    return 0 if report.ok else 1


def _cmd_verify_proofpath(args, parser) -> int:
    report = proof_path_audit(args.r, args.n, args.samples, args.seed)
    print("check: proofpath")
    print(f"r: {report.r}")
    print(f"n: {report.n}")
    print(f"samples: {report.samples}")
    print(f"seed: {report.seed}")
    print(f"checked: {report.checked}")
    print(f"special_branch: {'ok' if report.special_ok else 'BROKEN'}")
    for bad in report.failures:
        print(
            f"failure: {format_sequence(bad.sequence)} "
            f"front={_bool_text(bad.front_ok)} mid={_bool_text(bad.mid_ok)} "
            f"tail={_bool_text(bad.tail_ok)} branch={bad.branch}"
        )
    print(f"failures: {len(report.failures)}")
    print(f"result: {'PASS' if report.ok else 'FAIL'}")
    return 0 if report.ok else 1


def _cmd_verify_oracle(args, parser) -> int:
    if not 2 <= args.max_n <= 7:
        parser.error("--max-n must be between 2 and 7")
    print("check: oracle")
    mismatches = 0
    for n in range(2, args.max_n + 1):
        census = degree_sequence_census(n)
        candidates = 0
        graphic = 0
        for entries in candidate_sequences(n):
            candidates += 1
            direct = is_graphic(DegreeSequence(entries))
            if direct:
                graphic += 1
            if direct != (entries in census):
                mismatches += 1
                print(
                    f"mismatch: n={n} sequence={','.join(str(d) for d in entries)} "
                    f"test={_bool_text(direct)} census={_bool_text(entries in census)}"
                )
        enumerated = {pi.entries for pi in enumerate_graphic_sequences(n)}
        if enumerated != census:
            mismatches += 1
            print(f"mismatch: n={n} enumeration disagrees with census")
        print(f"n={n}: candidates={candidates} graphic={graphic} census={len(census)}")
    print(f"mismatches: {mismatches}")
    print(f"result: {'PASS' if mismatches == 0 else 'FAIL'}")
    return 0 if mismatches == 0 else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degseq",
        description="Degree-sequence toolkit: graphicality, realizations, "
        "potentially-subgraph decisions, and degree-sum thresholds.",
    )
    top = parser.add_subparsers(dest="command", required=True)

    seq = top.add_parser("seq", help="single-sequence questions").add_subparsers(
        dest="subcommand", required=True
    )
    p = seq.add_parser("check", help="graphicality verdict plus aggregate-bound margins")
    p.add_argument("sequence", help="comma-separated degrees, e.g. 3,3,2,2")
    p.set_defaults(func=_cmd_seq_check)
    p = seq.add_parser("realize", help="construct one realization, largest degrees first")
    p.add_argument("sequence")
    p.set_defaults(func=_cmd_seq_realize)
    p = seq.add_parser("layoff", help="residual sequence after satisfying one vertex")
    p.add_argument("sequence")
    p.add_argument("--k", type=_positive, required=True, help="1-based position to lay off")
    p.set_defaults(func=_cmd_seq_layoff)

    potential = top.add_parser("potential", help="potentially-subgraph decisions").add_subparsers(
        dest="subcommand", required=True
    )
    p = potential.add_parser("decide", help="is some realization of the sequence a host?")
    p.add_argument("--seq", required=True, help="comma-separated degrees")
    _add_pattern_source(p)
    p.add_argument("--witness", action="store_true", help="print a witness realization and embedding")
    p.add_argument("--work-bound", type=_positive, default=DEFAULT_WORK_BOUND)
    p.set_defaults(func=_cmd_potential_decide)

    sigma = top.add_parser("sigma", help="degree-sum thresholds").add_subparsers(
        dest="subcommand", required=True
    )
    p = sigma.add_parser("formula", help="closed-form threshold for the removed-edges family")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--strict", action="store_true", help="reject parameters outside the proven range")
    p.set_defaults(func=_cmd_sigma_formula)
    p = sigma.add_parser("brute", help="exact threshold by full enumeration")
    _add_pattern_source(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--exclude-zero-terms", action="store_true", help="restrict to strictly positive sequences")
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--work-bound", type=_positive, default=DEFAULT_WORK_BOUND)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--timings", action="store_true", help="include wall-clock milliseconds in the report")
    p.set_defaults(func=_cmd_sigma_brute)

    verify = top.add_parser("verify", help="built-in verification suites").add_subparsers(
        dest="subcommand", required=True
    )
    p = verify.add_parser("lemma31", help="blocking construction has the right degrees, sum, and no pattern")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_verify_lemma31)
    p = verify.add_parser("condition", help="hypothesis implies conclusion over all graphic sequences")
    p.add_argument("--id", required=True, choices=CONDITION_IDS)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--threads", type=_positive, default=1)
    p.add_argument("--work-bound", type=_positive, default=DEFAULT_WORK_BOUND)
    p.set_defaults(func=_cmd_verify_condition)
    p = verify.add_parser("proofpath", help="derived degree conditions on seeded qualifying samples")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=_positive, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify_proofpath)
    p = verify.add_parser("oracle", help="graphicality test against the exhaustive graph census")
    p.add_argument("--max-n", type=int, default=6, help="largest length to sweep (2..7)")
    p.set_defaults(func=_cmd_verify_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except (DegseqError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
