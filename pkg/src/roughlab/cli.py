"""``roughlab`` command line.

Exit status: 0 on success, 1 when a theorem-labelled claim is falsified or a
fixture value does not replay, 2 on usage, parse or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from roughlab import io as rio
from roughlab.approximations import AccuracyVariant, approx_report
from roughlab.errors import ConfigurationError, RoughLabError, SizeLimitError
from roughlab.fixtures import replay_fixtures
from roughlab.ideals import Ideal
from roughlab.lab import (
    CLAIMS,
    Expectation,
    VerdictStatus,
    check_claim,
    get_claim,
    search_counterexample,
)
from roughlab.neighborhoods import Family, nbhd_system, parse_family, parse_kind
from roughlab.reports import FORMATS, TOPO_COLUMNS, render_approximations, render_rows, render_system, topo_row
from roughlab.topologies import generate_topology_ideal, is_topology, topo_approx

ALL_SUBSETS_MAX_N = 5
EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE = 0, 1, 2


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _load_inputs(args, family: Family):
    relation = rio.load_relation(args.relation)
    ideal = rio.load_ideal(args.ideal, relation.universe) if args.ideal else None
    if family is Family.IK and ideal is None:
        raise ConfigurationError("family ik needs --ideal")
    system = nbhd_system(relation, family, args.kind, ideal if family is Family.IK else None)
    return relation, ideal, system


def _improper_note(ideal: Optional[Ideal]) -> Optional[str]:
    if ideal is not None and ideal.is_improper:
        return "note: the ideal is improper (K is the whole power set)"
    return None


def cmd_nbhd(args) -> int:
    family = parse_family(args.family)
    relation, ideal, system = _load_inputs(args, family)
    if args.element is not None:
        _out(str(system[args.element]))
    else:
        _out(render_system(system, args.format))
    return EXIT_OK


def cmd_approx(args) -> int:
    family = parse_family(args.family)
    relation, ideal, system = _load_inputs(args, family)
    universe = relation.universe
    if args.all:
        if universe.n > ALL_SUBSETS_MAX_N:
            raise SizeLimitError(f"--all is limited to universes of at most {ALL_SUBSETS_MAX_N} elements")
        targets = sorted(universe.all_subsets(), key=lambda s: s.sort_key())
    else:
        targets = [universe.parse_subset(args.set)]
    variant = AccuracyVariant(args.variant) if args.variant else None
    results = [approx_report(system, ideal, f, variant) for f in targets]
    meta = {
        "family": family.value,
        "kind": system.kind.value,
        "variant": results[0].variant.value,
        "ideal": str(ideal) if ideal else "{∅}",
    }
    if ideal is not None and ideal.is_improper:
        meta["improper_ideal"] = True
    _out(render_approximations(results, args.format, meta))
    if args.figure:
        from roughlab.plotting import plot_approximations

        plot_approximations(results, args.figure, title=f"{system.label}  variant={meta['variant']}")
        print(f"figure written to {args.figure}", file=sys.stderr)
    return EXIT_OK


def cmd_topology(args) -> int:
    family = parse_family(args.family or ("ik" if args.ideal else "omega"))
    relation, ideal, system = _load_inputs(args, family)
    tau = generate_topology_ideal(system, ideal)
    ok = is_topology(tau)
    if args.format == "json":
        _out(json.dumps({"open_sets": tau.to_names(), "topology": ok}, ensure_ascii=False))
    else:
        for member in tau.members:
            _out(str(member))
        _out(f"{len(tau)} open sets")
        _out(f"topology: {'yes' if ok else 'no'}")
        note = _improper_note(ideal)
        if note:
            _out(note)
    if args.set is not None:
        result = topo_approx(tau, relation.universe.parse_subset(args.set))
        _out(render_rows([topo_row(result)], TOPO_COLUMNS, "markdown"))
    if args.figure:
        from roughlab.plotting import plot_topology

        plot_topology(tau, args.figure, title=f"open sets of {system.label}")
        print(f"figure written to {args.figure}", file=sys.stderr)
    return EXIT_OK


def _witness_lines(witness) -> list[str]:
    return [
        "relation: " + json.dumps(rio.relation_to_dict(witness.relation)),
        "ideal: " + json.dumps(rio.ideal_to_dict(witness.ideal)),
        "violation: " + witness.violation.line(),
    ]


def cmd_check(args) -> int:
    if args.list:
        for claim in CLAIMS:
            hyp = ", ".join(p.value for p in claim.hypothesis) or "-"
            _out(f"{claim.id}\t{claim.expected.value}\t[{hyp}]\t{claim.statement}")
        return EXIT_OK
    if not args.claim or not args.relation:
        raise ConfigurationError("check needs --claim and --relation (or --list)")
    claim = get_claim(args.claim)
    relation = rio.load_relation(args.relation)
    ideal = rio.load_ideal(args.ideal, relation.universe) if args.ideal else None
    verdict = check_claim(claim, relation, ideal)
    _out(f"claim: {claim.id} ({claim.expected.value})")
    _out(f"statement: {claim.statement}")
    _out(f"status: {verdict.status.value}")
    if verdict.status is VerdictStatus.HYPOTHESIS_UNMET:
        _out("unmet hypothesis: " + ", ".join(p.value for p in verdict.unmet))
        return EXIT_USAGE
    if verdict.witness is not None:
        _out("violation: " + verdict.witness.violation.line())
        if claim.expected is Expectation.THEOREM:
            return EXIT_FALSIFIED
    return EXIT_OK


def cmd_search(args) -> int:
    claim = get_claim(args.claim)
    witness = search_counterexample(claim, args.max_n)
    _out(f"claim: {claim.id} ({claim.expected.value})")
    if witness is None:
        _out(f"no counterexample up to n={args.max_n}")
        return EXIT_OK
    for line in _witness_lines(witness):
        _out(line)
    return EXIT_FALSIFIED if claim.expected is Expectation.THEOREM else EXIT_OK


def cmd_ingest(args) -> int:
    table = rio.load_information_table(args.table)
    try:
        relation = rio.ingest_information_table(table, args.threshold)
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, RoughLabError):
            raise
        raise ConfigurationError(f"bad threshold {args.threshold!r}") from None
    payload = json.dumps(rio.relation_to_dict(relation), ensure_ascii=False)
    if args.output:
        rio.save_relation(relation, args.output)
    else:
        _out(payload)
    return EXIT_OK


def cmd_examples(args) -> int:
    report = replay_fixtures()
    for line in report.lines():
        _out(line)
    passed = sum(c.passed for c in report.checks)
    _out(f"{passed}/{len(report.checks)} stated values reproduced")
    return EXIT_OK if report.passed else EXIT_FALSIFIED


def _kind_arg(text: str) -> str:
    try:
        return parse_kind(text).value
    except RoughLabError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="roughlab", description="Neighborhood rough-set computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def inputs(p, kind_required=True, family_default="omega"):
        p.add_argument("--relation", required=True, help="relation JSON file")
        p.add_argument("--ideal", help="ideal JSON file")
        p.add_argument("--family", default=family_default, choices=[f.value for f in Family])
        p.add_argument("--kind", required=kind_required, type=_kind_arg, help='one of a, b, "<a>", "<b>", i, u, "<i>", "<u>"')

    p = sub.add_parser("nbhd", help="print a neighborhood or a full neighborhood system")
    inputs(p)
    p.add_argument("--element")
    p.add_argument("--format", default="markdown", choices=FORMATS)
    p.set_defaults(func=cmd_nbhd)

    p = sub.add_parser("approx", help="lower/upper approximations, boundary and accuracy")
    inputs(p)
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--set", help='comma-separated elements, e.g. "q,t"; "" or "∅" for the empty set')
    target.add_argument("--all", action="store_true", help="every subset of the universe")
    p.add_argument("--variant", choices=[v.value for v in AccuracyVariant],
                   help="accuracy formula (default: plain for rho, iou otherwise)")
    p.add_argument("--format", default="markdown", choices=FORMATS)
    p.add_argument("--figure", help="also write a PNG figure to this path")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("topology", help="open sets generated by a neighborhood system")
    inputs(p, family_default=None)
    p.add_argument("--set", help="also report interior/closure of this set")
    p.add_argument("--format", default="text", choices=("text", "json"))
    p.add_argument("--figure", help="also write a Hasse diagram PNG to this path")
    p.set_defaults(func=cmd_topology)

    p = sub.add_parser("check", help="check one claim on one relation/ideal")
    p.add_argument("--claim")
    p.add_argument("--relation")
    p.add_argument("--ideal")
    p.add_argument("--list", action="store_true", help="list registered claims")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="exhaustive counterexample search over small universes")
    p.add_argument("--claim", required=True)
    p.add_argument("--max-n", type=int, default=3)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("ingest", help="derive a relation from an information table CSV")
    p.add_argument("--table", required=True)
    p.add_argument("--threshold", default="1", help="agreement fraction, e.g. 2/3 (default 1)")
    p.add_argument("--output", help="relation JSON path (default: stdout)")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("examples", help="replay the published worked examples")
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except RoughLabError as exc:
        print(f"roughlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())
